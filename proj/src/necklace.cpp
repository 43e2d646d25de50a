#include "wittkit/necklace.hpp"

#include <utility>

#include "wittkit/errors.hpp"
#include "wittkit/numth.hpp"
#include "wittkit/symfunc.hpp"

namespace wittkit {

namespace {

void require_compatible(const NeckVec& a, const NeckVec& b) {
  if (a.order() != b.order())
    throw ConfigError("necklace vectors have different truncation orders");
  if (a.order() > 0) require_same_ring(a.coord(1), b.coord(1));
}

}  // namespace

NeckVec::NeckVec(RingPtr ring, std::vector<Elem> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  for (const Elem& c : coords_)
    if (c.ring() != ring_) throw ConfigError("necklace coordinate from the wrong ring");
}

NeckVec NeckVec::zero(const RingPtr& ring, std::size_t order) {
  return NeckVec(ring, std::vector<Elem>(order, Elem::zero(ring)));
}

NeckVec NeckVec::one(const RingPtr& ring, std::size_t order) {
  auto v = zero(ring, order);
  if (order > 0) v.coords_[0] = Elem::one(ring);
  return v;
}

NeckVec NeckVec::m_vector(const Elem& r, std::size_t order) {
  std::vector<Elem> c;
  c.reserve(order);
  for (std::size_t n = 1; n <= order; ++n) c.push_back(necklace_poly(r, n));
  return NeckVec(r.ring(), std::move(c));
}

std::vector<Elem> NeckVec::ghost() const {
  std::vector<Elem> w;
  w.reserve(order());
  for (std::size_t n = 1; n <= order(); ++n) {
    Elem s = Elem::zero(ring_);
    for (long d : divisors(static_cast<long>(n)))
      s += coord(d).adams(static_cast<unsigned>(n / d)).scaled(Rat(d));
    w.push_back(std::move(s));
  }
  return w;
}

NeckVec NeckVec::from_ghost(const RingPtr& ring, const std::vector<Elem>& w) {
  std::vector<Elem> b;
  b.reserve(w.size());
  for (std::size_t n = 1; n <= w.size(); ++n) {
    Elem s = Elem::zero(ring);
    for (long d : divisors(static_cast<long>(n))) {
      int mu = moebius(d);
      if (mu == 0) continue;
      s += w[n / d - 1].adams(static_cast<unsigned>(d)).scaled(Rat(mu));
    }
    b.push_back(s.divided_exact(static_cast<long>(n)));
  }
  return NeckVec(ring, std::move(b));
}

NeckVec NeckVec::operator+(const NeckVec& o) const {
  require_compatible(*this, o);
  std::vector<Elem> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return NeckVec(ring_, std::move(c));
}

NeckVec NeckVec::operator-(const NeckVec& o) const { return *this + (-o); }

NeckVec NeckVec::operator*(const NeckVec& o) const {
  require_compatible(*this, o);
  std::vector<Elem> c(order(), Elem::zero(ring_));
  for (std::size_t n = 1; n <= order(); ++n) {
    Elem s = Elem::zero(ring_);
    for (long i : divisors(static_cast<long>(n)))
      for (long j : divisors(static_cast<long>(n))) {
        if (lcm_of(i, j) != static_cast<long>(n)) continue;
        Elem t = coord(i).adams(static_cast<unsigned>(n / i)) *
                 o.coord(j).adams(static_cast<unsigned>(n / j));
        s += t.scaled(Rat(gcd_of(i, j)));
      }
    c[n - 1] = std::move(s);
  }
  return NeckVec(ring_, std::move(c));
}

NeckVec NeckVec::operator-() const {
  std::vector<Elem> c = coords_;
  for (Elem& x : c) x = -x;
  return NeckVec(ring_, std::move(c));
}

NeckVec NeckVec::verschiebung(unsigned r) const {
  if (r == 0) throw ConfigError("verschiebung index must be positive");
  std::vector<Elem> c(order(), Elem::zero(ring_));
  for (std::size_t k = 1; k * r <= order(); ++k) c[k * r - 1] = coord(k);
  return NeckVec(ring_, std::move(c));
}

NeckVec NeckVec::frobenius(unsigned r) const {
  if (r == 0) throw ConfigError("frobenius index must be positive");
  std::vector<Elem> c;
  c.reserve(order() / r);
  for (std::size_t n = 1; n * r <= order(); ++n) {
    Elem s = Elem::zero(ring_);
    long rn = static_cast<long>(n * r);
    for (long j : divisors(rn)) {
      if (lcm_of(static_cast<long>(r), j) != rn) continue;
      s += coord(j).adams(static_cast<unsigned>(rn / j)).scaled(Rat(j / static_cast<long>(n)));
    }
    c.push_back(std::move(s));
  }
  return NeckVec(ring_, std::move(c));
}

bool NeckVec::operator==(const NeckVec& o) const {
  return ring_ == o.ring_ && coords_ == o.coords_;
}

std::string NeckVec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

NeckVec necklace_from_witt(const WittVec& a) {
  std::size_t n = a.order();
  NeckVec out = NeckVec::zero(a.ring(), n);
  for (std::size_t k = 1; k <= n; ++k)
    out = out + NeckVec::m_vector(a.coord(k), n).verschiebung(static_cast<unsigned>(k));
  return out;
}

WittVec witt_from_necklace(const NeckVec& b) {
  // component n of the forward map is sum_{d|n} M(a_d, n/d) with leading
  // term a_n, so the coordinates peel off in order
  std::vector<Elem> a;
  a.reserve(b.order());
  for (std::size_t n = 1; n <= b.order(); ++n) {
    Elem rest = Elem::zero(b.ring());
    for (long d : divisors(static_cast<long>(n)))
      if (d < static_cast<long>(n))
        rest += necklace_poly(a[d - 1], static_cast<unsigned>(n / d));
    a.push_back(b.coord(n) - rest);
  }
  return WittVec(b.ring(), std::move(a));
}

namespace {

std::vector<Elem> powered(const std::vector<Elem>& letters, unsigned e) {
  std::vector<Elem> out;
  out.reserve(letters.size());
  for (const Elem& x : letters) out.push_back(x.pow(e));
  return out;
}

std::vector<Elem> pairwise(const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
  std::vector<Elem> out;
  out.reserve(xs.size() * ys.size());
  for (const Elem& x : xs)
    for (const Elem& y : ys) out.push_back(x * y);
  return out;
}

// the r-fold product alphabet: one letter per word of length r (multiset)
std::vector<Elem> self_product(const RingPtr& r, const std::vector<Elem>& xs,
                               unsigned e) {
  std::vector<Elem> out = {Elem::one(r)};
  for (unsigned step = 0; step < e; ++step) out = pairwise(out, xs);
  return out;
}

// M(X*Y, k) = sum_{lcm(i,j)=k} gcd(i,j) M(X^{k/i}, i) M(Y^{k/j}, j)
bool product_identity(const RingPtr& r, const std::vector<Elem>& xs,
                      const std::vector<Elem>& ys, unsigned kmax) {
  for (unsigned k = 1; k <= kmax; ++k) {
    Elem lhs = necklace_sym(r, pairwise(xs, ys), k);
    Elem rhs = Elem::zero(r);
    for (long i : divisors(k))
      for (long j : divisors(k)) {
        if (lcm_of(i, j) != static_cast<long>(k)) continue;
        Elem t = necklace_sym(r, powered(xs, k / i), static_cast<unsigned>(i)) *
                 necklace_sym(r, powered(ys, k / j), static_cast<unsigned>(j));
        rhs += t.scaled(Rat(gcd_of(i, j)));
      }
    if (lhs != rhs) return false;
  }
  return true;
}

// M(X^r, k) = sum_{lcm(r,j)=kr} (j/k) M(X^{kr/j}, j), X^r the product alphabet
// on the left and letter powers inside the sum
bool power_identity(const RingPtr& r, const std::vector<Elem>& xs, unsigned rr,
                    unsigned kmax) {
  for (unsigned k = 1; k <= kmax; ++k) {
    Elem lhs = necklace_sym(r, self_product(r, xs, rr), k);
    Elem rhs = Elem::zero(r);
    long kr = static_cast<long>(k) * rr;
    for (long j : divisors(kr)) {
      if (lcm_of(static_cast<long>(rr), j) != kr) continue;
      rhs += necklace_sym(r, powered(xs, static_cast<unsigned>(kr / j)),
                          static_cast<unsigned>(j))
                 .scaled(Rat(j / static_cast<long>(k)));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// gcd(r,s) M(X^{s/g} Y^{r/g}, k) summed over ij/gcd(ri,sj) = k/g, with powers
// again product alphabets; the twist exponents come from reading the left
// side as component lcm(r,s)*k of V_r M(X) * V_s M(Y).
bool two_parameter_identity(const RingPtr& r, const std::vector<Elem>& xs,
                            const std::vector<Elem>& ys, unsigned rr, unsigned ss,
                            unsigned kmax) {
  long g = gcd_of(rr, ss);
  long l = lcm_of(rr, ss);
  for (unsigned k = 1; k <= kmax; ++k) {
    Elem lhs = necklace_sym(
        r,
        pairwise(self_product(r, xs, ss / g), self_product(r, ys, rr / g)), k);
    lhs = lhs.scaled(Rat(g));
    Elem rhs = Elem::zero(r);
    for (long i = 1; i * g <= static_cast<long>(k) * ss; ++i)
      for (long j = 1; j * g <= static_cast<long>(k) * rr; ++j) {
        long gij = gcd_of(rr * i, ss * j);
        if (i * j * g != static_cast<long>(k) * gij) continue;
        long n = l * k;
        Elem t = necklace_sym(r, powered(xs, static_cast<unsigned>(n / (rr * i))),
                              static_cast<unsigned>(i)) *
                 necklace_sym(r, powered(ys, static_cast<unsigned>(n / (ss * j))),
                              static_cast<unsigned>(j));
        rhs += t.scaled(Rat(gij));
      }
    if (lhs != rhs) return false;
  }
  return true;
}

// ghost inversion turns componentwise products into necklace products
bool ghost_product_identity(unsigned order) {
  auto fl = Ring::free_lambda(static_cast<int>(order) + 2);
  std::mt19937_64 rng(977);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Elem> u, v, uv;
    for (unsigned n = 0; n < order; ++n) {
      u.push_back(random_elem(fl, rng));
      v.push_back(random_elem(fl, rng));
      uv.push_back(u.back() * v.back());
    }
    if (NeckVec::from_ghost(fl, uv) !=
        NeckVec::from_ghost(fl, u) * NeckVec::from_ghost(fl, v))
      return false;
  }
  return true;
}

}  // namespace

std::vector<IdentityCheck> necklace_identity_checks(unsigned kmax) {
  auto r = Ring::polynomials(4, AdamsAction::VarPower);
  std::vector<Elem> xs = {Elem(r, Poly::variable(1)), Elem(r, Poly::variable(2))};
  std::vector<Elem> ys = {Elem(r, Poly::variable(3)), Elem(r, Poly::variable(4))};
  std::vector<IdentityCheck> out;
  out.push_back({"product", product_identity(r, xs, ys, kmax)});
  out.push_back({"power", power_identity(r, xs, 2, kmax) &&
                              power_identity(r, xs, 3, kmax)});
  out.push_back({"two-parameter",
                 two_parameter_identity(r, xs, ys, 2, 3, kmax) &&
                     two_parameter_identity(r, xs, ys, 2, 4, kmax)});
  out.push_back({"ghost-product", ghost_product_identity(6)});
  return out;
}

}  // namespace wittkit
