#include "wittkit/supersym.hpp"

#include <utility>

#include "wittkit/numth.hpp"

namespace wittkit {

namespace {

// Series in t with Poly coefficients, s[n] = coefficient of t^n.
// Multiply in place by (1 + sign*c*t^k).
void mul_factor(std::vector<Poly>& s, const Poly& c, std::size_t k, int sign) {
  for (std::size_t n = s.size(); n-- > k;) {
    Poly shift = c * s[n - k];
    if (sign > 0)
      s[n] += shift;
    else
      s[n] -= shift;
  }
}

// Divide in place by (1 - sign*c*t), via the geometric expansion.
void div_linear(std::vector<Poly>& s, const Poly& c, int sign) {
  for (std::size_t n = 1; n < s.size(); ++n) {
    Poly shift = c * s[n - 1];
    if (sign > 0)
      s[n] += shift;
    else
      s[n] -= shift;
  }
}

// Strip Witt-style factors: given s = prod_{n>=1} 1/(1 - g_n t^n), recover the g_n.
std::vector<Poly> peel_factors(std::vector<Poly> s) {
  std::vector<Poly> g(s.size());
  for (std::size_t n = 1; n < s.size(); ++n) {
    g[n] = s[n];
    mul_factor(s, g[n], n, -1);
  }
  return g;
}

}  // namespace

bool is_supersymmetric(const Poly& f, unsigned a, unsigned b) {
  auto swapped = [&](VarId u, VarId v) {
    return f.vars_mapped([&](VarId w) { return w == u ? v : w == v ? u : w; });
  };
  for (unsigned i = 1; i < a; ++i)
    if (swapped(i, i + 1) != f) return false;
  for (unsigned j = 1; j < b; ++j)
    if (swapped(a + j, a + j + 1) != f) return false;
  if (a == 0 || b == 0) return true;
  // Set x_1 = y_1 = t and demand the result be free of t.
  VarId t = a + b + 1;
  Poly tv = Poly::variable(t);
  Poly sub = f.substituted([&](VarId w) -> const Poly* {
    return (w == 1 || w == a + 1) ? &tv : nullptr;
  });
  for (const auto& [m, c] : sub.terms())
    for (auto [v, e] : m.factors)
      if (v == t) return false;
  return true;
}

SuperFamilies supersym_generators(unsigned a, unsigned b, unsigned nmax) {
  SuperFamilies out;
  std::size_t len = nmax + 1;

  out.sigma.assign(len, Poly{});
  for (unsigned n = 1; n <= nmax; ++n) {
    Poly s;
    for (unsigned i = 1; i <= a; ++i) s += Poly::variable(i, n);
    for (unsigned j = 1; j <= b; ++j) s -= Poly::variable(a + j, n);
    out.sigma[n] = std::move(s);
  }

  // prod_j (1 - y_j t) / prod_i (1 - x_i t)
  out.h.assign(len, Poly{});
  out.h[0] = Poly::constant(1);
  for (unsigned j = 1; j <= b; ++j) mul_factor(out.h, Poly::variable(a + j), 1, -1);
  for (unsigned i = 1; i <= a; ++i) div_linear(out.h, Poly::variable(i), 1);

  // prod_i (1 + x_i t) / prod_j (1 + y_j t)
  out.e.assign(len, Poly{});
  out.e[0] = Poly::constant(1);
  for (unsigned i = 1; i <= a; ++i) mul_factor(out.e, Poly::variable(i), 1, 1);
  for (unsigned j = 1; j <= b; ++j) div_linear(out.e, Poly::variable(a + j), -1);

  out.q = peel_factors(out.h);
  out.t = peel_factors(out.e);

  out.l.assign(len, Poly{});
  for (unsigned n = 1; n <= nmax; ++n) {
    Poly acc;
    for (long d : divisors(n)) {
      int mu = moebius(d);
      if (mu == 0) continue;
      Rat c(mu, static_cast<long>(n));
      c.canonicalize();
      acc += out.sigma[d].pow(n / d).scaled(c);
    }
    out.l[n] = std::move(acc);
  }
  return out;
}

}  // namespace wittkit
