#include "wittkit/gradedlog.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "wittkit/errors.hpp"
#include "wittkit/numth.hpp"

namespace wittkit {

unsigned GradedIndex::height() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0u);
}

bool GradedIndex::operator<(const GradedIndex& o) const {
  if (alpha != o.alpha) return alpha < o.alpha;
  return parity < o.parity;
}

std::string GradedIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i)
    s += (i ? "," : "") + std::to_string(alpha[i]);
  s += ")";
  if (parity) s += "'";
  return s;
}

GradedIndex operator+(const GradedIndex& a, const GradedIndex& b) {
  GradedIndex r = a;
  for (std::size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] += b.alpha[i];
  r.parity = (a.parity + b.parity) % 2;
  return r;
}

GradedSeries::GradedSeries(RingPtr ring, unsigned rank, unsigned cap)
    : ring_(std::move(ring)), rank_(rank), cap_(cap) {
  if (rank_ == 0) throw ConfigError("graded series needs positive rank");
  if (cap_ == 0) throw ConfigError("graded series needs positive height cap");
}

Elem GradedSeries::coeff(const GradedIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Elem::zero(ring_) : it->second;
}

GradedSeries& GradedSeries::set(const GradedIndex& idx, const Elem& value) {
  if (idx.alpha.size() != rank_) throw ConfigError("index rank mismatch");
  unsigned h = idx.height();
  if (h == 0) throw ConfigError("zero index has no coefficient slot");
  if (value.ring() != ring_) throw ConfigError("coefficient from the wrong ring");
  GradedIndex key{idx.alpha, idx.parity % 2};
  if (h > cap_ || value.is_zero())
    terms_.erase(key);
  else
    terms_[key] = value;
  return *this;
}

void GradedSeries::require_compatible(const GradedSeries& o) const {
  if (ring_ != o.ring_ || rank_ != o.rank_ || cap_ != o.cap_)
    throw ConfigError("graded series shapes differ");
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  require_compatible(o);
  GradedSeries r = *this;
  for (const auto& [idx, c] : o.terms_) r.set(idx, r.coeff(idx) + c);
  return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
  require_compatible(o);
  GradedSeries r = *this;
  for (const auto& [idx, c] : o.terms_) r.set(idx, r.coeff(idx) - c);
  return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  require_compatible(o);
  GradedSeries r(ring_, rank_, cap_);
  for (const auto& [ia, ca] : terms_)
    for (const auto& [ib, cb] : o.terms_) {
      if (ia.height() + ib.height() > cap_) continue;
      GradedIndex idx = ia + ib;
      r.set(idx, r.coeff(idx) + ca * cb);
    }
  return r;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r(ring_, rank_, cap_);
  for (const auto& [idx, c] : terms_) r.terms_[idx] = -c;
  return r;
}

GradedSeries GradedSeries::scaled(const Rat& c) const {
  GradedSeries r(ring_, rank_, cap_);
  if (c == 0) return r;
  for (const auto& [idx, v] : terms_) r.terms_[idx] = v.scaled(c);
  return r;
}

GradedSeries GradedSeries::adams(unsigned k) const {
  GradedSeries r(ring_, rank_, cap_);
  for (const auto& [idx, v] : terms_) r.terms_[idx] = v.adams(k);
  return r;
}

GradedSeries GradedSeries::index_scaled(unsigned k) const {
  if (k == 0) throw ConfigError("index scale must be positive");
  GradedSeries r(ring_, rank_, cap_);
  for (const auto& [idx, v] : terms_) {
    if (idx.height() * k > cap_) continue;
    GradedIndex scaled_idx = idx;
    for (unsigned& a : scaled_idx.alpha) a *= k;
    scaled_idx.parity = idx.parity * k % 2;
    r.set(scaled_idx, r.coeff(scaled_idx) + v);
  }
  return r;
}

GradedSeries GradedSeries::power(const Rat& c) const {
  GradedSeries acc(ring_, rank_, cap_);
  GradedSeries pw = *this;
  Rat coef = c;
  for (unsigned k = 1; k <= cap_ && !pw.is_zero(); ++k) {
    acc = acc + pw.scaled(coef);
    pw = pw * *this;
    coef *= (c - Rat(k)) / Rat(k + 1);
  }
  return acc;
}

unsigned GradedSeries::min_height() const {
  unsigned h = cap_ + 1;
  for (const auto& [idx, c] : terms_) h = std::min(h, idx.height());
  return h;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
  return ring_ == o.ring_ && rank_ == o.rank_ && cap_ == o.cap_ &&
         terms_ == o.terms_;
}

std::string GradedSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")E" + idx.str();
  }
  return s;
}

GradedSeries graded_log(const GradedSeries& f) {
  GradedSeries acc(f.ring(), f.rank(), f.cap());
  GradedSeries pw = f;
  for (unsigned k = 1; k <= f.cap() && !pw.is_zero(); ++k) {
    acc = acc + pw.scaled(Rat(1, k));
    pw = pw * f;
  }
  return acc;
}

GradedSeries graded_exp(const GradedSeries& f) {
  GradedSeries acc(f.ring(), f.rank(), f.cap());
  GradedSeries pw = f;
  Rat coef = 1;
  for (unsigned k = 1; k <= f.cap() && !pw.is_zero(); ++k) {
    acc = acc + pw.scaled(coef);
    pw = pw * f;
    coef /= Rat(k + 1);
    coef = -coef;
  }
  return acc;
}

namespace {

// multiset decompositions of target into support indices, accumulating
// (|s|-1)!/s! prod coeff^s
void decompose(const std::vector<std::pair<GradedIndex, Elem>>& support,
               std::size_t pos, std::vector<int>& rest, unsigned rest_parity,
               unsigned long picked, const Int& denom, const Elem& partial,
               Elem& out) {
  bool done = std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; });
  if (done && rest_parity == 0 && picked > 0) {
    Rat w(factorial(picked - 1), denom);
    w.canonicalize();
    out += partial.scaled(w);
    return;
  }
  if (pos == support.size() || done) return;
  const auto& [idx, c] = support[pos];
  decompose(support, pos + 1, rest, rest_parity, picked, denom, partial, out);
  std::vector<int> r = rest;
  Elem p = partial;
  for (unsigned long s = 1;; ++s) {
    bool fits = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] -= static_cast<int>(idx.alpha[i]);
      if (r[i] < 0) fits = false;
    }
    if (!fits) break;
    p *= c;
    decompose(support, pos + 1, r, (rest_parity + s * idx.parity) % 2,
              picked + s, denom * factorial(s), p, out);
  }
}

}  // namespace

Elem log_coeff_direct(const GradedSeries& f, const GradedIndex& target) {
  if (target.alpha.size() != f.rank()) throw ConfigError("index rank mismatch");
  std::vector<std::pair<GradedIndex, Elem>> support(f.terms().begin(),
                                                    f.terms().end());
  std::vector<int> rest(target.alpha.begin(), target.alpha.end());
  Elem out = Elem::zero(f.ring());
  decompose(support, 0, rest, target.parity % 2, 0, Int(1), Elem::one(f.ring()),
            out);
  return out;
}

GradedSeries divisor_transfer(const GradedSeries& f) {
  GradedSeries acc(f.ring(), f.rank(), f.cap());
  for (unsigned k = 1; k * f.min_height() <= f.cap(); ++k)
    acc = acc + f.adams(k).index_scaled(k).scaled(Rat(1, k));
  return acc;
}

GradedSeries mobius_transfer(const GradedSeries& f) {
  GradedSeries acc(f.ring(), f.rank(), f.cap());
  for (unsigned k = 1; k * f.min_height() <= f.cap(); ++k) {
    int mu = moebius(k);
    if (mu == 0) continue;
    Rat w(mu, k);
    w.canonicalize();
    acc = acc + f.adams(k).index_scaled(k).scaled(w);
  }
  return acc;
}

GradedSeries lie_components(const GradedSeries& h) {
  return mobius_transfer(graded_log(h));
}

Elem lie_component_closed(const GradedSeries& h, const GradedIndex& target) {
  if (target.alpha.size() != h.rank()) throw ConfigError("index rank mismatch");
  unsigned g = 0;
  for (unsigned a : target.alpha) g = std::gcd(g, a);
  Elem out = Elem::zero(h.ring());
  for (long d : divisors(g)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    std::vector<unsigned> tau;
    for (unsigned a : target.alpha) tau.push_back(a / d);
    std::vector<unsigned> parities;
    if (d % 2 == 1)
      parities = {target.parity};
    else if (target.parity == 0)
      parities = {0, 1};
    for (unsigned b : parities) {
      Rat w(mu, d);
      w.canonicalize();
      out += log_coeff_direct(h, {tau, b}).adams(d).scaled(w);
    }
  }
  return out;
}

DenominatorReport denominator_check(const GradedSeries& lie,
                                    const GradedSeries& h) {
  if (lie.ring() != h.ring() || lie.rank() != h.rank() || lie.cap() != h.cap())
    throw ConfigError("graded series shapes differ");
  GradedSeries acc(h.ring(), h.rank(), h.cap());
  for (const auto& [idx, c] : lie.terms()) {
    GradedSeries single(h.ring(), h.rank(), h.cap());
    single.set(idx, c);
    // tail of exp(-divisor sum) for this component
    GradedSeries t = -graded_exp(divisor_transfer(single));
    acc = acc + t + acc * t;
  }
  GradedSeries residual = acc + h;
  DenominatorReport rep;
  rep.product_ok = residual.is_zero();
  rep.log_ok = divisor_transfer(lie) == graded_log(h);
  rep.residuals.assign(residual.terms().begin(), residual.terms().end());
  return rep;
}

BilinearForm::BilinearForm(std::vector<std::vector<Rat>> gram,
                           std::vector<Rat> rho)
    : gram_(std::move(gram)), rho_(std::move(rho)) {
  if (gram_.size() != rho_.size())
    throw ConfigError("pairing matrix and direction vector sizes differ");
  for (const auto& row : gram_)
    if (row.size() != gram_.size()) throw ConfigError("pairing matrix not square");
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw ConfigError("pairing matrix not symmetric");
}

Rat BilinearForm::pair(const std::vector<unsigned>& a,
                       const std::vector<unsigned>& b) const {
  Rat s = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < gram_.size(); ++j)
      s += Rat(a[i]) * gram_[i][j] * Rat(b[j]);
  return s;
}

Rat BilinearForm::rho_pair(const std::vector<unsigned>& a) const {
  Rat s = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < gram_.size(); ++j)
      s += rho_[i] * gram_[i][j] * Rat(a[j]);
  return s;
}

Rat BilinearForm::norm(const std::vector<unsigned>& a) const {
  return pair(a, a);
}

namespace {

void enumerate_alphas(unsigned rank, unsigned budget, std::vector<unsigned>& cur,
                      std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == rank) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= budget; ++v) {
    cur.push_back(v);
    enumerate_alphas(rank, budget - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

RecursionTables log_by_recursion(const GradedSeries& h, const BilinearForm& form) {
  if (form.rank() != h.rank()) throw ConfigError("pairing rank mismatch");
  std::vector<std::vector<unsigned>> alphas;
  std::vector<unsigned> cur;
  enumerate_alphas(h.rank(), h.cap(), cur, alphas);
  std::vector<GradedIndex> order;
  for (const auto& a : alphas) {
    if (std::all_of(a.begin(), a.end(), [](unsigned v) { return v == 0; }))
      continue;
    order.push_back({a, 0});
    order.push_back({a, 1});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const GradedIndex& x, const GradedIndex& y) {
                     return x.height() < y.height();
                   });

  RecursionTables tab;
  auto lookup = [](const std::map<GradedIndex, Elem>& m, const GradedIndex& k,
                   const RingPtr& r) {
    auto it = m.find(k);
    return it == m.end() ? Elem::zero(r) : it->second;
  };
  for (const GradedIndex& idx : order) {
    Elem hval = h.coeff(idx);
    Elem dir_sum = Elem::zero(h.ring());
    Elem lap_sum = Elem::zero(h.ring());
    for (const auto& [hidx, hc] : h.terms()) {
      GradedIndex beta{std::vector<unsigned>(h.rank()),
                       (idx.parity + hidx.parity) % 2};
      bool ok = true;
      bool nonzero = false;
      for (unsigned i = 0; i < h.rank(); ++i) {
        if (idx.alpha[i] < hidx.alpha[i]) ok = false;
        else if ((beta.alpha[i] = idx.alpha[i] - hidx.alpha[i]) > 0)
          nonzero = true;
      }
      if (!ok || !nonzero) continue;
      dir_sum += lookup(tab.directional, beta, h.ring()).scaled(
                     form.rho_pair(beta.alpha)) * hc;
      lap_sum += lookup(tab.laplacian, beta, h.ring()) * hc;
    }
    Rat piv = form.rho_pair(idx.alpha);
    if (piv == 0) {
      // the relation degenerates to 0 = 0 unless h reaches this index, in
      // which case the coefficient is genuinely lost
      if (!hval.is_zero() || !dir_sum.is_zero())
        throw PivotError("direction pairs to zero against " + idx.str() +
                         "; use the norm-weighted recursion or another direction");
    } else {
      Elem eta = hval + dir_sum.scaled(1 / piv);
      if (!eta.is_zero()) tab.directional[idx] = eta;
    }
    Elem star = hval.scaled(form.norm(idx.alpha)) + lap_sum;
    if (!star.is_zero()) tab.laplacian[idx] = star;
  }
  return tab;
}

Elem super_necklace(const Elem& even_part, const Elem& odd_part, unsigned n) {
  if (n == 0) throw ConfigError("dimension index must be positive");
  Elem acc = Elem::zero(even_part.ring());
  for (long d : divisors(n)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    Elem base = d % 2 == 0 ? even_part - odd_part : even_part + odd_part;
    Elem t = base.pow(n / d).adams(d);
    acc += mu == 1 ? t : -t;
  }
  return acc.divided_exact(n);
}

}  // namespace wittkit
