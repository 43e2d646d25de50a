#include "wittkit/qseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "wittkit/errors.hpp"
#include "wittkit/gradedlog.hpp"
#include "wittkit/numth.hpp"
#include "wittkit/ring.hpp"

namespace wittkit {

namespace {

// precision tag for series known exactly (constants, or before any product)
constexpr long kFullPrecision = 1L << 40;

}  // namespace

LaurentSeries::LaurentSeries(long lo, long hi, std::vector<Rat> coeffs)
    : lo_(lo), hi_(hi), c_(std::move(coeffs)) {
  if (static_cast<long>(c_.size()) > hi_ - lo_ + 1)
    throw ConfigError("coefficient list longer than the window");
  trim();
}

LaurentSeries LaurentSeries::zero(long hi) { return {hi + 1, hi, {}}; }

LaurentSeries LaurentSeries::one(long hi) { return {0, hi, {Rat(1)}}; }

void LaurentSeries::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    lo_ += static_cast<long>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lo_ = hi_ + 1;
}

Rat LaurentSeries::coeff(long e) const {
  if (e > hi_)
    throw TruncationError("coefficient of q^" + std::to_string(e) +
                          " lies beyond the tracked precision q^" +
                          std::to_string(hi_));
  if (e < lo_ || e >= lo_ + static_cast<long>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(e - lo_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  long hi = std::min(hi_, o.hi_);
  long lo = std::min(lo_, o.lo_);
  // allocate over the union of supports, not the precision window
  long send = lo;
  if (!c_.empty()) send = std::max(send, lo_ + static_cast<long>(c_.size()));
  if (!o.c_.empty())
    send = std::max(send, o.lo_ + static_cast<long>(o.c_.size()));
  send = std::min(send, hi + 1);
  if (send <= lo) return zero(hi);
  std::vector<Rat> c(static_cast<std::size_t>(send - lo), Rat(0));
  auto pour = [&](const LaurentSeries& s) {
    for (std::size_t i = 0; i < s.c_.size(); ++i) {
      long e = s.lo_ + static_cast<long>(i);
      if (e <= hi) c[static_cast<std::size_t>(e - lo)] += s.c_[i];
    }
  };
  pour(*this);
  pour(o);
  return {lo, hi, std::move(c)};
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
  return *this + (-o);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (Rat& v : r.c_) v = -v;
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  // each factor is exact up to its hi, so the product is exact up to the
  // point where the other factor's unknown tail first interferes
  long hi = std::min(hi_ + o.lo_, lo_ + o.hi_);
  long lo = lo_ + o.lo_;
  if (c_.empty() || o.c_.empty() || lo > hi)
    return zero(std::min(hi, kFullPrecision));
  long send = lo + static_cast<long>(c_.size() + o.c_.size()) - 1;
  send = std::min(send, hi + 1);
  if (send <= lo) return zero(hi);
  std::vector<Rat> c(static_cast<std::size_t>(send - lo), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      long e = lo_ + static_cast<long>(i) + o.lo_ + static_cast<long>(j);
      if (e > hi) break;
      c[static_cast<std::size_t>(e - lo)] += c_[i] * o.c_[j];
    }
  }
  return {lo, hi, std::move(c)};
}

LaurentSeries LaurentSeries::scaled(const Rat& v) const {
  LaurentSeries r = *this;
  for (Rat& x : r.c_) x *= v;
  r.trim();
  return r;
}

LaurentSeries LaurentSeries::truncated(long hi) const {
  if (hi >= hi_) return *this;
  LaurentSeries r = *this;
  r.hi_ = hi;
  if (static_cast<long>(r.c_.size()) > hi - r.lo_ + 1)
    r.c_.resize(static_cast<std::size_t>(std::max<long>(0, hi - r.lo_ + 1)));
  r.trim();
  return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  return lo_ == o.lo_ && hi_ == o.hi_ && c_ == o.c_;
}

std::string LaurentSeries::str() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (any) out << " + ";
    out << format_rational(c_[i]) << " q^" << lo_ + static_cast<long>(i);
    any = true;
  }
  if (!any) out << "0";
  out << " (to q^" << hi_ << ")";
  return out.str();
}

QSeries::QSeries(std::vector<Rat> tail) : tail_(std::move(tail)) {}

Rat QSeries::coeff(unsigned n) const {
  if (n == 0 || n > tail_.size())
    throw TruncationError("tail coefficient " + std::to_string(n) +
                          " not stored");
  return tail_[n - 1];
}

QSeries QSeries::truncated(unsigned n) const {
  if (n > tail_.size()) throw TruncationError("cannot extend a stored tail");
  return QSeries(std::vector<Rat>(tail_.begin(), tail_.begin() + n));
}

LaurentSeries QSeries::laurent() const {
  std::vector<Rat> c(tail_.size() + 2, Rat(0));
  c[0] = 1;
  for (std::size_t i = 0; i < tail_.size(); ++i) c[i + 2] = tail_[i];
  return {-1, static_cast<long>(tail_.size()), std::move(c)};
}

namespace {

// powers f^0 .. f^m; f^k is exact through q^{order - k + 1}
std::vector<LaurentSeries> laurent_powers(const QSeries& f, unsigned m) {
  std::vector<LaurentSeries> pows;
  pows.reserve(m + 1);
  pows.push_back(LaurentSeries::one(kFullPrecision));
  LaurentSeries base = f.laurent();
  for (unsigned k = 1; k <= m; ++k) pows.push_back(pows.back() * base);
  return pows;
}

// peel f-powers off f^m/m until only the q^{-m} spike and a positive tail are
// left; returns the polynomial coefficients and the residual expansion
std::pair<std::vector<Rat>, LaurentSeries> eliminate(
    const std::vector<LaurentSeries>& pows, unsigned m) {
  LaurentSeries p = pows[m].scaled(Rat(1, static_cast<long>(m)));
  std::vector<Rat> poly(m + 1, Rat(0));
  poly[m] = Rat(1, static_cast<long>(m));
  for (long j = static_cast<long>(m) - 1; j >= 0; --j) {
    Rat c = p.coeff(-j);
    if (c == 0) continue;
    p = p - pows[static_cast<std::size_t>(j)].scaled(c);
    poly[static_cast<std::size_t>(j)] = -c;
  }
  return {std::move(poly), std::move(p)};
}

}  // namespace

std::vector<Rat> faber_polynomial(const QSeries& f, unsigned m) {
  if (m == 0) throw ConfigError("polynomial index must be positive");
  return eliminate(laurent_powers(f, m), m).first;
}

LaurentSeries faber_series(const QSeries& f, unsigned m) {
  if (m == 0) throw ConfigError("polynomial index must be positive");
  return eliminate(laurent_powers(f, m), m).second;
}

HTable::HTable(const QSeries& f) : order_(f.order()) {
  auto pows = laurent_powers(f, order_);
  rows_.reserve(order_);
  for (unsigned m = 1; m <= order_; ++m) {
    LaurentSeries x = eliminate(pows, m).second;
    std::vector<Rat> row;
    row.reserve(order_ / m);
    for (unsigned n = 1; n * m <= order_; ++n)
      row.push_back(x.coeff(static_cast<long>(n)));
    rows_.push_back(std::move(row));
  }
}

Rat HTable::at(unsigned m, unsigned n) const {
  if (m == 0 || n == 0 ||
      static_cast<unsigned long>(m) * n > static_cast<unsigned long>(order_))
    throw TruncationError("cell (" + std::to_string(m) + ", " +
                          std::to_string(n) + ") outside the stored table");
  return rows_[m - 1][n - 1];
}

ReplicableReport is_replicable(const HTable& t) {
  ReplicableReport rep;
  for (unsigned prod = 1; prod <= t.order(); ++prod) {
    std::map<unsigned, std::array<unsigned, 2>> lead;  // gcd -> first pair seen
    for (unsigned a = 1; a <= prod; ++a) {
      if (prod % a) continue;
      unsigned b = prod / a;
      unsigned g = std::gcd(a, b);
      auto it = lead.find(g);
      if (it == lead.end()) {
        lead.emplace(g, std::array<unsigned, 2>{a, b});
        continue;
      }
      if (t.at(a, b) != t.at(it->second[0], it->second[1])) {
        rep.replicable = false;
        rep.witness = {it->second[0], it->second[1], a, b};
        return rep;
      }
    }
  }
  return rep;
}

LogCheckReport log_identity_check(const QSeries& f, unsigned degree_cap) {
  if (degree_cap < 2) throw ConfigError("degree cap leaves no cells to check");
  if (degree_cap - 1 > f.order())
    throw TruncationError("tail too short for the requested degree cap");
  RingPtr q = Ring::rationals();
  GradedSeries kernel(q, 2, degree_cap);
  // the divided difference (p^i - q^i)/(p - q), spread over p^{u+1} q^{i-u}
  for (unsigned i = 1; i + 1 <= degree_cap; ++i)
    for (unsigned u = 0; u < i; ++u)
      kernel.set({{u + 1, i - u}, 0}, Elem::rational(q, f.coeff(i)));
  GradedSeries lg = graded_log(kernel);
  HTable table(f);
  LogCheckReport rep;
  for (unsigned m = 1; m < degree_cap; ++m)
    for (unsigned n = 1; m + n <= degree_cap; ++n) {
      if (static_cast<unsigned long>(m) * n > f.order()) continue;
      GradedIndex idx{{m, n}, 0};
      Rat want = table.at(m, n);
      if (rep.log_identity_ok && lg.coeff(idx).rat() != want) {
        rep.log_identity_ok = false;
        rep.first_mismatch = {m, n};
      }
      if (rep.multiset_ok && log_coeff_direct(kernel, idx).rat() != want) {
        rep.multiset_ok = false;
        if (rep.log_identity_ok) rep.first_mismatch = {m, n};
      }
      if (!rep.log_identity_ok && !rep.multiset_ok) return rep;
    }
  return rep;
}

ProductReport difference_product_check(const QSeries& f, unsigned p_max,
                                       unsigned q_max) {
  if (p_max == 0) throw ConfigError("need at least one p-degree");
  if (f.order() + 1 < p_max + q_max)
    throw TruncationError("tail too short for the requested window");
  auto pows = laurent_powers(f, p_max);
  // running product as a vector over p-degrees with Laurent q-coefficients
  std::vector<LaurentSeries> acc(p_max + 1, LaurentSeries::zero(kFullPrecision));
  acc[0] = LaurentSeries::one(kFullPrecision);
  for (unsigned m = 1; m <= p_max; ++m) {
    LaurentSeries xm = eliminate(pows, m).second;
    std::vector<LaurentSeries> factor(p_max + 1,
                                      LaurentSeries::zero(kFullPrecision));
    factor[0] = LaurentSeries::one(kFullPrecision);
    LaurentSeries term = LaurentSeries::one(kFullPrecision);
    for (unsigned k = 1; k * m <= p_max; ++k) {
      term = term * xm.scaled(Rat(-1, static_cast<long>(k)));
      factor[k * m] = term;
    }
    std::vector<LaurentSeries> next(p_max + 1,
                                    LaurentSeries::zero(kFullPrecision));
    for (unsigned i = 0; i <= p_max; ++i) {
      if (acc[i].is_zero()) continue;
      for (unsigned j = 0; i + j <= p_max; ++j) {
        if (factor[j].is_zero()) continue;
        next[i + j] = next[i + j] + acc[i] * factor[j];
      }
    }
    acc = std::move(next);
  }
  ProductReport rep;
  for (unsigned deg = 0; deg <= p_max; ++deg) {
    LaurentSeries want =
        deg == 0   ? LaurentSeries::one(kFullPrecision)
        : deg == 1 ? -f.laurent()
                   : LaurentSeries(0, kFullPrecision, {f.coeff(deg - 1)});
    long start = std::min(acc[deg].lo(), want.lo());
    for (long e = start; e <= static_cast<long>(q_max); ++e)
      if (acc[deg].coeff(e) != want.coeff(e)) {
        rep.ok = false;
        rep.p_degree = deg;
        rep.q_exponent = e;
        return rep;
      }
  }
  return rep;
}

ReplicateFamily::ReplicateFamily(const QSeries& f, unsigned a_max) {
  if (a_max == 0) throw ConfigError("need at least the trivial replicate");
  if (static_cast<unsigned long>(a_max) * a_max > f.order())
    throw TruncationError("order too small to reach the requested replicate");
  HTable table(f);
  reps_.reserve(a_max);
  reps_.push_back(f);
  for (unsigned a = 2; a <= a_max; ++a) {
    unsigned len = f.order() / (a * a);
    std::vector<Rat> tail;
    tail.reserve(len);
    for (unsigned n = 1; n <= len; ++n) {
      Rat v = table.at(a, a * n);
      for (unsigned d = 1; d < a; ++d) {
        if (a % d) continue;
        unsigned ratio = a / d;
        v -= reps_[d - 1].coeff(ratio * ratio * n) * Rat(1, d);
      }
      tail.push_back(v * a);
    }
    reps_.emplace_back(std::move(tail));
  }
  for (unsigned m = 1; m <= f.order() && consistent_; ++m)
    for (unsigned n = 1; static_cast<unsigned long>(m) * n <= f.order(); ++n) {
      unsigned g = std::gcd(m, n);
      if (g > a_max) continue;
      Rat s(0);
      for (unsigned d = 1; d <= g; ++d) {
        if (g % d) continue;
        s += reps_[d - 1].coeff(m / d * (n / d)) * Rat(1, d);
      }
      if (s != table.at(m, n)) {
        consistent_ = false;
        failure_ = {m, n};
        break;
      }
    }
}

const QSeries& ReplicateFamily::replicate(unsigned a) const {
  if (a == 0 || a > reps_.size())
    throw ConfigError("replicate index outside the extracted family");
  return reps_[a - 1];
}

bool FamilyReport::all_ok() const {
  if (!substitution_ok) return false;
  for (const auto& [a, r] : replicate_checks)
    if (!r.replicable) return false;
  return true;
}

FamilyReport completely_replicable_check(const QSeries& f, unsigned a_max) {
  ReplicateFamily fam(f, a_max);
  FamilyReport rep;
  rep.substitution_ok = fam.consistent();
  rep.failed_cell = fam.failure();
  for (unsigned a = 1; a <= fam.count(); ++a)
    rep.replicate_checks.emplace_back(a, is_replicable(HTable(fam.replicate(a))));
  return rep;
}

QSeries j_invariant(unsigned order) {
  if (order > 128) throw ConfigError("expansion table capped at order 128");
  std::size_t len = order + 2;  // need q^{order+1} of the shifted quotient
  std::vector<Int> e4(len, Int(0));
  e4[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    long s3 = 0;
    for (long d : divisors(static_cast<long>(n))) s3 += d * d * d;
    e4[n] = 240 * s3;
  }
  auto conv = [len](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(len, Int(0));
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  std::vector<Int> num = conv(conv(e4, e4), e4);
  std::vector<Int> den(len, Int(0));  // prod (1 - q^n)^24, the weight-12 cusp
  den[0] = 1;                         // form with its leading q divided out
  for (std::size_t n = 1; n < len; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = len; i-- > n;) den[i] -= den[i - n];
  std::vector<Int> quo(len, Int(0));
  for (std::size_t k = 0; k < len; ++k) {
    Int acc = num[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= den[i] * quo[k - i];
    quo[k] = acc;
  }
  if (quo[0] != 1 || quo[1] != 744)
    throw IntegralityError("modular expansion out of shape");
  std::vector<Rat> tail;
  tail.reserve(order);
  for (unsigned n = 1; n <= order; ++n) tail.emplace_back(quo[n + 1]);
  return QSeries(std::move(tail));
}

}  // namespace wittkit
