#pragma once

#include <functional>

#include "wittkit/numth.hpp"
#include "wittkit/ring.hpp"

namespace wittkit {

// Symmetric functions with rational coefficients, kept in the power-sum basis:
// variable k is the k-th power sum, weighted degree k. A cap of -1 means no
// truncation; most callers pass the ambient degree bound.

Grading power_grading(long cap);

Poly sym_truncated(const Poly& f, long cap);
Poly sym_mul(const Poly& f, const Poly& g, long cap);
Poly sym_pow(const Poly& f, unsigned k, long cap);

// psi^k on power sums: variable j -> variable jk.
Poly adams_scaled(const Poly& f, unsigned k, long cap);

// exp/log for series with zero constant term; finite because weights are >= 1.
Poly exp_series(const Poly& f, const Grading& g);
Poly log1p_series(const Poly& f, const Grading& g);  // log(1 + f)

// Newton conversions between the classical bases (memoised, thread safe).
Poly power_in_complete(unsigned n);
Poly complete_in_power(unsigned n);
Poly elementary_in_power(unsigned n);
Poly power_in_elementary(unsigned n);

enum class SymBasis { Power, Complete, Elementary };
// Reads variable k of f as the k-th `from` generator, rewrites into `to`.
Poly convert_basis(const Poly& f, SymBasis from, SymBasis to, long cap);

// Substitutes images(k) for the k-th slot of outer; every image needs zero
// constant term. Ordinary plethysm feeds slot k the index-scaled inner.
Poly plethysm_family(const Poly& outer, const std::function<Poly(unsigned)>& images, long cap);
Poly plethysm(const Poly& outer, const Poly& inner, long cap);

// Series builders, all expressed in power sums through degree <= cap.
Poly complete_series(long cap);         // 1 + h_1 + h_2 + ...
Poly signed_complete_series(long cap);  // 1 - h_1 + h_2 - ... = prod 1/(1+x_i)
Poly moebius_series(long cap);          // sum (1/n) sum_{d|n} mu(d) p_d^{n/d}
Poly signed_moebius_series(long cap);   // same with an extra (-1)^{n/d}

// Sum of k-th powers of the primitive d-th roots of unity.
long ramanujan_sum(long k, long d);
Poly lk_series(long k, long cap);

// Necklace symmetric evaluation over an alphabet of ring elements; power sums
// on the alphabet are literal power sums of its letters.
Elem necklace_sym(const RingPtr& ring, const std::vector<Elem>& letters, unsigned k);

// The free slot ring: adams images of the ghost generators treated as
// independent variables, psi^m of slot j having weight m*j.
VarId slot_var(unsigned adams_index, unsigned slot);
Grading slot_grading(long cap);
Poly slot_adams(const Poly& f, unsigned k, long cap);
// Substituting the moebius-inverted ghost expansion into the exponential
// generating element leaves it fixed; checked degree by degree.
bool slot_fixed_point_check(long cap);

// Universal coefficient polynomials for the series ring, in variables
// a_i = variable i and b_j = variable kSecondAlphabet + j. All have integer
// coefficients; computed through the power-sum bridge and memoised.
inline constexpr VarId kSecondAlphabet = VarId{1} << 20;

Poly product_coeff_poly(unsigned n);                  // n-th coeff of f *_1 g
Poly exterior_coeff_poly(unsigned n, unsigned m);     // n-th coeff of lambda^m f
Poly frobenius_coeff_poly(unsigned n, unsigned k);    // k-th coeff of F_n f

}  // namespace wittkit
