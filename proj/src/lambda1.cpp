#include "wittkit/lambda1.hpp"

#include <utility>

#include "wittkit/errors.hpp"
#include "wittkit/symfunc.hpp"

namespace wittkit {

namespace {

void require_compatible(const Series1& a, const Series1& b) {
  if (a.order() != b.order())
    throw ConfigError("series have different truncation orders");
  if (a.order() > 0) require_same_ring(a.coeff(1), b.coeff(1));
}

// series product with implicit leading 1's
std::vector<Elem> convolve(const RingPtr& r, const std::vector<Elem>& a,
                           const std::vector<Elem>& b) {
  std::vector<Elem> c(a.size(), Elem::zero(r));
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Elem s = a[n - 1] + b[n - 1];
    for (std::size_t i = 1; i < n; ++i) s += a[i - 1] * b[n - i - 1];
    c[n - 1] = std::move(s);
  }
  return c;
}

// f/g with both leading coefficients 1, triangular
std::vector<Elem> divide(const RingPtr& r, const std::vector<Elem>& f,
                         const std::vector<Elem>& g) {
  std::vector<Elem> h(f.size(), Elem::zero(r));
  for (std::size_t n = 1; n <= f.size(); ++n) {
    Elem s = f[n - 1] - g[n - 1];
    for (std::size_t i = 1; i < n; ++i) s -= g[i - 1] * h[n - i - 1];
    h[n - 1] = std::move(s);
  }
  return h;
}

// evaluate a two-alphabet universal polynomial at coefficient vectors
Elem eval_universal(const RingPtr& r, const Poly& p, const std::vector<Elem>& a,
                    const std::vector<Elem>& b) {
  Elem out = Elem::zero(r);
  for (const auto& [m, c] : p.terms()) {
    Elem t = Elem::one(r);
    for (auto [v, e] : m.factors) {
      const Elem& base =
          v > kSecondAlphabet ? b.at(v - kSecondAlphabet - 1) : a.at(v - 1);
      t *= base.pow(e);
    }
    out += t.scaled(c);
  }
  return out;
}

}  // namespace

Series1::Series1(RingPtr ring, std::vector<Elem> tail)
    : ring_(std::move(ring)), tail_(std::move(tail)) {
  for (const Elem& c : tail_)
    if (c.ring() != ring_) throw ConfigError("series coefficient from the wrong ring");
}

Series1 Series1::one(const RingPtr& ring, std::size_t order) {
  return Series1(ring, std::vector<Elem>(order, Elem::zero(ring)));
}

Series1 Series1::geometric(const Elem& a, std::size_t order) {
  std::vector<Elem> t;
  t.reserve(order);
  Elem p = Elem::one(a.ring());
  for (std::size_t n = 1; n <= order; ++n) {
    p *= a;
    t.push_back(p);
  }
  return Series1(a.ring(), std::move(t));
}

Series1 Series1::oplus(const Series1& o) const {
  require_compatible(*this, o);
  return Series1(ring_, convolve(ring_, tail_, o.tail_));
}

Series1 Series1::reciprocal() const {
  return Series1(ring_,
                 divide(ring_, std::vector<Elem>(order(), Elem::zero(ring_)), tail_));
}

Series1 Series1::negated_arg() const {
  std::vector<Elem> t = tail_;
  for (std::size_t n = 1; n <= t.size(); n += 2) t[n - 1] = -t[n - 1];
  return Series1(ring_, std::move(t));
}

std::vector<Elem> Series1::dlog() const {
  // f' = w f termwise: w_n = n a_n - sum_{k<n} w_k a_{n-k}
  std::vector<Elem> w(order(), Elem::zero(ring_));
  for (std::size_t n = 1; n <= order(); ++n) {
    Elem s = tail_[n - 1].scaled(Rat(static_cast<long>(n)));
    for (std::size_t k = 1; k < n; ++k) s -= w[k - 1] * tail_[n - k - 1];
    w[n - 1] = std::move(s);
  }
  return w;
}

Series1 Series1::from_dlog(const RingPtr& ring, const std::vector<Elem>& w) {
  std::vector<Elem> a(w.size(), Elem::zero(ring));
  for (std::size_t n = 1; n <= w.size(); ++n) {
    Elem s = w[n - 1];
    for (std::size_t k = 1; k < n; ++k) s += w[k - 1] * a[n - k - 1];
    a[n - 1] = s.divided_exact(static_cast<long>(n));
  }
  return Series1(ring, std::move(a));
}

Series1 Series1::star1(const Series1& o) const {
  require_compatible(*this, o);
  auto wa = dlog(), wb = o.dlog();
  for (std::size_t i = 0; i < wa.size(); ++i) wa[i] *= wb[i];
  return from_dlog(ring_, wa);
}

Series1 Series1::star1_universal(const Series1& o) const {
  require_compatible(*this, o);
  std::vector<Elem> c;
  c.reserve(order());
  for (std::size_t n = 1; n <= order(); ++n)
    c.push_back(eval_universal(ring_, product_coeff_poly(static_cast<unsigned>(n)),
                               tail_, o.tail_));
  return Series1(ring_, std::move(c));
}

Series1 Series1::verschiebung(unsigned n) const {
  if (n == 0) throw ConfigError("verschiebung index must be positive");
  std::vector<Elem> t(order(), Elem::zero(ring_));
  for (std::size_t k = 1; k * n <= order(); ++k) t[k * n - 1] = tail_[k - 1];
  return Series1(ring_, std::move(t));
}

Series1 Series1::frobenius(unsigned n) const {
  if (n == 0) throw ConfigError("frobenius index must be positive");
  auto w = dlog();
  std::vector<Elem> sub;
  sub.reserve(order() / n);
  for (std::size_t k = 1; k * n <= order(); ++k) sub.push_back(w[k * n - 1]);
  return from_dlog(ring_, sub);
}

Series1 Series1::frobenius_universal(unsigned n) const {
  if (n == 0) throw ConfigError("frobenius index must be positive");
  std::vector<Elem> c;
  for (std::size_t k = 1; k * n <= order(); ++k)
    c.push_back(eval_universal(
        ring_, frobenius_coeff_poly(n, static_cast<unsigned>(k)), tail_, {}));
  return Series1(ring_, std::move(c));
}

bool Series1::operator==(const Series1& o) const {
  return ring_ == o.ring_ && tail_ == o.tail_;
}

std::string Series1::str() const {
  std::string s = "1";
  for (std::size_t n = 1; n <= order(); ++n) {
    if (tail_[n - 1].is_zero()) continue;
    s += " + (" + tail_[n - 1].str() + ")*t^" + std::to_string(n);
  }
  return s;
}

Series1 series_lambda(unsigned m, const Series1& f) {
  if (m == 0) {
    // every coefficient of the result is 1
    std::vector<Elem> c(f.order(), Elem::one(f.ring()));
    return Series1(f.ring(), std::move(c));
  }
  std::vector<Elem> c;
  for (std::size_t n = 1; n * m <= f.order(); ++n)
    c.push_back(eval_universal(
        f.ring(), exterior_coeff_poly(static_cast<unsigned>(n), m), f.tail(), {}));
  return Series1(f.ring(), std::move(c));
}

Series1 exp_map(const WittVec& a) {
  std::size_t ord = a.order();
  std::vector<Elem> t(ord, Elem::zero(a.ring()));
  for (std::size_t n = 1; n <= ord; ++n) {
    // multiply by 1/(1 - a_n t^n): ascending geometric recurrence
    const Elem& an = a.coord(n);
    if (an.is_zero()) continue;
    for (std::size_t k = n; k <= ord; ++k)
      t[k - 1] += (k == n ? Elem::one(a.ring()) : t[k - n - 1]) * an;
  }
  return Series1(a.ring(), std::move(t));
}

WittVec exp_inverse(const Series1& f) {
  std::vector<Elem> cur = f.tail();
  std::vector<Elem> a;
  a.reserve(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Elem an = cur[n - 1];
    a.push_back(an);
    if (an.is_zero()) continue;
    // strip the factor: multiply by (1 - a_n t^n), descending
    for (std::size_t k = f.order(); k >= n; --k)
      cur[k - 1] -= (k == n ? Elem::one(f.ring()) : cur[k - n - 1]) * an;
  }
  return WittVec(f.ring(), std::move(a));
}

Series1 sym_map(const NeckVec& b) {
  std::size_t ord = b.order();
  auto acc = Series1::one(b.ring(), ord);
  for (std::size_t n = 1; n <= ord; ++n) {
    auto powers = symmetric_power_list(b.coord(n), static_cast<unsigned>(ord / n));
    std::vector<Elem> factor(ord, Elem::zero(b.ring()));
    for (std::size_t r = 1; r * n <= ord; ++r) factor[r * n - 1] = powers[r];
    acc = acc.oplus(Series1(b.ring(), std::move(factor)));
  }
  return acc;
}

NeckVec sym_inverse(const Series1& f) {
  std::vector<Elem> cur = f.tail();
  std::vector<Elem> b;
  b.reserve(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Elem bn = cur[n - 1];
    b.push_back(bn);
    if (bn.is_zero()) continue;
    auto powers = symmetric_power_list(bn, static_cast<unsigned>(f.order() / n));
    std::vector<Elem> factor(f.order(), Elem::zero(f.ring()));
    for (std::size_t r = 1; r * n <= f.order(); ++r) factor[r * n - 1] = powers[r];
    cur = divide(f.ring(), cur, factor);
  }
  return NeckVec(f.ring(), std::move(b));
}

Series1 star_q(const Series1& f, const Series1& g, long q) {
  if (q == 0) throw ConfigError("deformation parameter must be nonzero");
  require_compatible(f, g);
  if (f.ring()->kind() == RingKind::Integers)
    throw ConfigError("q-deformed product needs rational coefficients");
  auto wa = f.dlog(), wb = g.dlog();
  Rat inv(1, q);
  inv.canonicalize();
  for (std::size_t i = 0; i < wa.size(); ++i) wa[i] = (wa[i] * wb[i]).scaled(inv);
  return Series1::from_dlog(f.ring(), wa);
}

Series1 star_q_identity(const RingPtr& ring, std::size_t order, long q) {
  if (q == 0) throw ConfigError("deformation parameter must be nonzero");
  if (ring->kind() == RingKind::Integers)
    throw ConfigError("q-deformed product needs rational coefficients");
  std::vector<Elem> w(order, Elem::integer(ring, q));
  return Series1::from_dlog(ring, w);
}

WittVec witt_lambda(unsigned m, const WittVec& x) {
  return exp_inverse(series_lambda(m, exp_map(x)));
}

NeckVec neck_lambda(unsigned m, const NeckVec& b) {
  return sym_inverse(series_lambda(m, sym_map(b)));
}

}  // namespace wittkit
