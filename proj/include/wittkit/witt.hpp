#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittkit/ring.hpp"

namespace wittkit {

// Truncated big Witt vector (a_1..a_N). Arithmetic goes through the ghost
// components w_n = sum_{d|n} d * a_d^{n/d}; over the integers the divisions
// in the return trip are exact by universality, and any failure throws.
class WittVec {
 public:
  WittVec(RingPtr ring, std::vector<Elem> coords);

  static WittVec zero(const RingPtr& ring, std::size_t order);
  static WittVec teichmuller(const Elem& r, std::size_t order);  // (r,0,0,...)

  std::size_t order() const { return coords_.size(); }
  const RingPtr& ring() const { return ring_; }
  const Elem& coord(std::size_t n) const { return coords_.at(n - 1); }  // 1-based
  const std::vector<Elem>& coords() const { return coords_; }

  std::vector<Elem> ghost() const;
  static WittVec from_ghost(const RingPtr& ring, const std::vector<Elem>& w);

  WittVec operator+(const WittVec& o) const;
  WittVec operator-(const WittVec& o) const;
  WittVec operator*(const WittVec& o) const;
  WittVec operator-() const;

  // V_r pushes a_k to slot rk (same order); F_r reads ghost slots rn and
  // returns the vector of order floor(N/r).
  WittVec verschiebung(unsigned r) const;
  WittVec frobenius(unsigned r) const;

  bool operator==(const WittVec& o) const;
  bool operator!=(const WittVec& o) const { return !(*this == o); }
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Elem> coords_;
};

// lambda-operation transported through the power-series realisation; defined
// with the series layer.
WittVec witt_lambda(unsigned m, const WittVec& x);

}  // namespace wittkit
