#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittkit/necklace.hpp"
#include "wittkit/ring.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

// Truncated power series 1 + a_1 t + ... + a_N t^N. The additive structure is
// series multiplication; the second operation couples log-derivatives
// pointwise, so 1/(1-at) behaves like a rank-one element.
class Series1 {
 public:
  Series1(RingPtr ring, std::vector<Elem> tail);  // tail[i] = coeff of t^{i+1}

  static Series1 one(const RingPtr& ring, std::size_t order);
  static Series1 geometric(const Elem& a, std::size_t order);  // 1/(1-at)

  std::size_t order() const { return tail_.size(); }
  const RingPtr& ring() const { return ring_; }
  const Elem& coeff(std::size_t k) const { return tail_.at(k - 1); }  // k >= 1
  const std::vector<Elem>& tail() const { return tail_; }

  Series1 oplus(const Series1& o) const;       // series product
  Series1 reciprocal() const;                  // additive inverse
  Series1 negated_arg() const;                 // t -> -t
  Series1 star1(const Series1& o) const;       // log-derivative transport
  Series1 star1_universal(const Series1& o) const;  // coefficient polynomials

  Series1 verschiebung(unsigned n) const;  // t -> t^n
  Series1 frobenius(unsigned n) const;     // adams; order floor(N/n)
  Series1 frobenius_universal(unsigned n) const;

  // w_n with f'/f = sum w_{n+1} t^n; integral recurrence, no division
  std::vector<Elem> dlog() const;
  static Series1 from_dlog(const RingPtr& ring, const std::vector<Elem>& w);

  bool operator==(const Series1& o) const;
  bool operator!=(const Series1& o) const { return !(*this == o); }
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Elem> tail_;
};

// lambda-operation: coefficient n is the universal subset-alphabet polynomial
// in the first n*m coefficients, so the result truncates to floor(N/m).
Series1 series_lambda(unsigned m, const Series1& f);

// prod_n 1/(1 - a_n t^n) and its triangular inverse.
Series1 exp_map(const WittVec& a);
WittVec exp_inverse(const Series1& f);

// prod_n sum_r S^r(b_n) t^{nr} and its triangular inverse.
Series1 sym_map(const NeckVec& b);
NeckVec sym_inverse(const Series1& f);

// q-deformed product: divide log-derivatives by q, multiply, rescale.
// Needs rational coefficients; q must be nonzero.
Series1 star_q(const Series1& f, const Series1& g, long q);
Series1 star_q_identity(const RingPtr& ring, std::size_t order, long q);

}  // namespace wittkit
