#pragma once

#include <vector>

#include "wittkit/poly.hpp"

namespace wittkit {

// Polynomials in x_1..x_a (variables 1..a) and y_1..y_b (variables a+1..a+b).
// A polynomial is supersymmetric when it is symmetric in the x's, symmetric in
// the y's, and setting x_1 = y_1 = t leaves it independent of t.

bool is_supersymmetric(const Poly& f, unsigned a, unsigned b);

// Six generating families, each indexed by n: sigma, q, t, l start at 1
// (slot 0 stays zero); h and e are series with h[0] = e[0] = 1.
struct SuperFamilies {
  std::vector<Poly> sigma, h, e, q, t, l;
};

SuperFamilies supersym_generators(unsigned a, unsigned b, unsigned nmax);

}  // namespace wittkit
