#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittkit/ring.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

// Necklace vector (b_1..b_N) over a ring with Adams operations. Addition is
// componentwise; the product couples components through lcm/gcd pairs,
//   (b*c)_n = sum_{lcm(i,j)=n} gcd(i,j) psi^{n/i}(b_i) psi^{n/j}(c_j).
class NeckVec {
 public:
  NeckVec(RingPtr ring, std::vector<Elem> coords);

  static NeckVec zero(const RingPtr& ring, std::size_t order);
  static NeckVec one(const RingPtr& ring, std::size_t order);  // (1,0,0,...)
  // (M(r,1), ..., M(r,N)) built from the necklace polynomials of r.
  static NeckVec m_vector(const Elem& r, std::size_t order);

  std::size_t order() const { return coords_.size(); }
  const RingPtr& ring() const { return ring_; }
  const Elem& coord(std::size_t n) const { return coords_.at(n - 1); }  // 1-based
  const std::vector<Elem>& coords() const { return coords_; }

  // w_n = sum_{d|n} d psi^{n/d}(b_d); a pointwise ring map.
  std::vector<Elem> ghost() const;
  // b_n = (1/n) sum_{d|n} mu(d) psi^d(w_{n/d})
  static NeckVec from_ghost(const RingPtr& ring, const std::vector<Elem>& w);

  NeckVec operator+(const NeckVec& o) const;
  NeckVec operator-(const NeckVec& o) const;
  NeckVec operator*(const NeckVec& o) const;
  NeckVec operator-() const;

  NeckVec verschiebung(unsigned r) const;  // b_{n/r} or 0, same order
  // beta_n = sum_{lcm(r,j)=rn} (j/n) psi^{rn/j}(b_j), order floor(N/r)
  NeckVec frobenius(unsigned r) const;

  bool operator==(const NeckVec& o) const;
  bool operator!=(const NeckVec& o) const { return !(*this == o); }
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Elem> coords_;
};

// The coordinatewise isomorphism with Witt vectors: a Witt vector maps to
// sum_n V_n(M(a_n)); the inverse peels triangularly.
NeckVec necklace_from_witt(const WittVec& a);
WittVec witt_from_necklace(const NeckVec& b);

// lambda-operation transported through the power-series realisation; defined
// with the series layer.
NeckVec neck_lambda(unsigned m, const NeckVec& b);

// Alphabet identities behind the necklace product: expands both sides of the
// product / power / two-parameter formulas over formal letters, and checks
// that the ghost inverse turns componentwise products into necklace products.
struct IdentityCheck {
  std::string name;
  bool ok;
};
std::vector<IdentityCheck> necklace_identity_checks(unsigned kmax);

}  // namespace wittkit
