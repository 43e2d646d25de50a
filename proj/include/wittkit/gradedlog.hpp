#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wittkit/rational.hpp"
#include "wittkit/ring.hpp"

namespace wittkit {

// Multidegree with a Z_2 parity tag. alpha is never all-zero.
struct GradedIndex {
  std::vector<unsigned> alpha;
  unsigned parity = 0;

  unsigned height() const;
  bool operator<(const GradedIndex& o) const;
  bool operator==(const GradedIndex& o) const {
    return alpha == o.alpha && parity == o.parity;
  }
  std::string str() const;
};

GradedIndex operator+(const GradedIndex& a, const GradedIndex& b);

// Series over the parity-tagged multidegree semigroup, zero constant term;
// stored coefficients sit on the sign-twisted basis, so products of terms
// just add indices. Everything above the height cap is dropped.
class GradedSeries {
 public:
  GradedSeries(RingPtr ring, unsigned rank, unsigned cap);

  const RingPtr& ring() const { return ring_; }
  unsigned rank() const { return rank_; }
  unsigned cap() const { return cap_; }
  const std::map<GradedIndex, Elem>& terms() const { return terms_; }

  Elem coeff(const GradedIndex& idx) const;  // zero when absent
  GradedSeries& set(const GradedIndex& idx, const Elem& value);

  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;
  GradedSeries operator*(const GradedSeries& o) const;
  GradedSeries operator-() const;
  GradedSeries scaled(const Rat& c) const;

  GradedSeries adams(unsigned k) const;         // coefficientwise
  GradedSeries index_scaled(unsigned k) const;  // index (a,p) -> (ka, kp)
  GradedSeries power(const Rat& c) const;       // (1+f)^c - 1, binomial series

  bool is_zero() const { return terms_.empty(); }
  unsigned min_height() const;  // cap+1 when zero
  bool operator==(const GradedSeries& o) const;
  bool operator!=(const GradedSeries& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void require_compatible(const GradedSeries& o) const;

  RingPtr ring_;
  unsigned rank_;
  unsigned cap_;
  std::map<GradedIndex, Elem> terms_;
};

// -log(1-f) and its inverse 1-exp(-f).
GradedSeries graded_log(const GradedSeries& f);
GradedSeries graded_exp(const GradedSeries& f);

// Coefficient of graded_log(f) at target, computed from the multiset
// decompositions of target into support indices (no series expansion).
Elem log_coeff_direct(const GradedSeries& f, const GradedIndex& target);

// Index-transfer operators: divisor_transfer = sum_k (1/k) shift_k adams_k,
// mobius_transfer the Moebius-weighted inverse.
GradedSeries divisor_transfer(const GradedSeries& f);
GradedSeries mobius_transfer(const GradedSeries& f);

// Component series of the (free) Lie superalgebra attached to an
// enveloping series: mobius_transfer of graded_log.
GradedSeries lie_components(const GradedSeries& h);

// Single coefficient of lie_components via the Moebius/Adams closed sum
// over index divisors (even divisors reach parity 0 from both parities).
Elem lie_component_closed(const GradedSeries& h, const GradedIndex& target);

// Checks the product identity prod exp(-sum_r (1/r) psi^r(c) E^{r idx}) =
// 1 - h for given component data, and the log form of the same statement.
struct DenominatorReport {
  bool product_ok = false;
  bool log_ok = false;
  std::vector<std::pair<GradedIndex, Elem>> residuals;  // nonzero only
};
DenominatorReport denominator_check(const GradedSeries& lie,
                                    const GradedSeries& h);

// Exact-rational symmetric pairing on multidegrees plus a direction vector.
class BilinearForm {
 public:
  BilinearForm(std::vector<std::vector<Rat>> gram, std::vector<Rat> rho);

  unsigned rank() const { return static_cast<unsigned>(rho_.size()); }
  Rat pair(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
  Rat rho_pair(const std::vector<unsigned>& a) const;
  Rat norm(const std::vector<unsigned>& a) const;  // pair(a, a)

 private:
  std::vector<std::vector<Rat>> gram_;
  std::vector<Rat> rho_;
};

// Height recursion for the coefficients of graded_log(h): `directional`
// solves the direction-derivative relation (needs nonzero rho pairing on
// every index reached, else PivotError), `laplacian` the norm-weighted
// variant whose values are norm(idx) * log-coefficient minus the pairing
// cross terms.
struct RecursionTables {
  std::map<GradedIndex, Elem> directional;
  std::map<GradedIndex, Elem> laplacian;
};
RecursionTables log_by_recursion(const GradedSeries& h, const BilinearForm& form);

// Total dimension sequence of the free Lie superalgebra on an even part and
// an odd part in degree one: (1/n) sum_{d|n} mu(d) psi^d((even - (-1)^d odd)^{n/d}).
// The even/odd difference version is necklace_poly of (even - odd).
Elem super_necklace(const Elem& even_part, const Elem& odd_part, unsigned n);

}  // namespace wittkit
