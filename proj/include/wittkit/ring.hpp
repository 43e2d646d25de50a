#pragma once

#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "wittkit/errors.hpp"
#include "wittkit/numth.hpp"
#include "wittkit/poly.hpp"

namespace wittkit {

enum class RingKind { Integers, Rationals, FreeLambda, Polynomials };

// How the Adams operations act on a polynomial carrier.
enum class AdamsAction {
  Identity,  // every element is fixed: the binomial structure
  VarPower,  // variables are rank-one classes: psi^n maps x to x^n
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr integers();
  static RingPtr rationals();
  // Rational polynomials in p_1..p_cap with deg p_k = k, truncated above total
  // weighted degree cap; psi^n sends p_k to p_{nk} (zero beyond the cap).
  static RingPtr free_lambda(int degree_cap);
  static RingPtr polynomials(int var_count, AdamsAction action);
  // Same carrier as base with the Adams operations forced to the identity.
  static RingPtr binomial_over(const RingPtr& base);

  RingKind kind() const { return kind_; }
  int degree_cap() const { return degree_cap_; }
  int var_count() const { return var_count_; }
  AdamsAction adams_action() const { return adams_; }
  bool integral() const { return kind_ == RingKind::Integers; }
  bool uses_poly() const {
    return kind_ == RingKind::FreeLambda || kind_ == RingKind::Polynomials;
  }
  bool same(const Ring& o) const;
  Grading grading() const;
  std::string describe() const;
  std::string var_name(VarId v) const;

 private:
  Ring(RingKind k, int cap, int vars, AdamsAction a)
      : kind_(k), degree_cap_(cap), var_count_(vars), adams_(a) {}

  RingKind kind_;
  int degree_cap_ = -1;
  int var_count_ = 0;
  AdamsAction adams_ = AdamsAction::Identity;
};

// A ring element tagged with its ring. Integer-ring elements are carried as
// rationals; operations documented to rationalise retract at the end.
class Elem {
 public:
  Elem() = default;
  Elem(RingPtr r, Rat v);
  Elem(RingPtr r, Poly v);

  static Elem zero(const RingPtr& r);
  static Elem one(const RingPtr& r);
  static Elem integer(const RingPtr& r, long n);
  static Elem rational(const RingPtr& r, const Rat& q);

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  const Rat& rat() const { return std::get<Rat>(value_); }
  const Poly& poly() const { return std::get<Poly>(value_); }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }

  Elem scaled(const Rat& c) const;
  // Division by a nonzero integer through the rationalisation; retracts for
  // integral rings and throws IntegralityError if the quotient falls outside.
  Elem divided_exact(long n) const;
  Elem pow(unsigned k) const;
  Elem adams(unsigned n) const;

  // For integral rings, checks the value actually lies in the ring.
  Elem retracted() const;
  bool integral_value() const;

  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingPtr ring_;
  std::variant<Rat, Poly> value_;
};

void require_same_ring(const Elem& a, const Elem& b);

// lambda^n via the Newton-style recursion over the Adams operations,
// n lambda^n(x) = sum_{i=1..n} (-1)^{i-1} psi^i(x) lambda^{n-i}(x).
std::vector<Elem> lambda_list(const Elem& x, unsigned n);
Elem lambda_op(const Elem& x, unsigned n);

// Symmetric powers: n S^n(x) = sum_{i=1..n} psi^i(x) S^{n-i}(x).
std::vector<Elem> symmetric_power_list(const Elem& x, unsigned n);
Elem symmetric_power(const Elem& x, unsigned n);

// Necklace polynomial M(x, n) = (1/n) sum_{d|n} mu(d) psi^d(x^{n/d}).
Elem necklace_poly(const Elem& x, unsigned n);

struct IntegralityRow {
  unsigned n;
  std::string value;
  bool integral;
};
struct IntegralityReport {
  bool all_integral = true;
  std::vector<IntegralityRow> rows;
};
// Checks (1/n) sum_{d|n} mu(d) x^{n/d} stays integral for n <= n_max; meaningful
// diagnostic for binomial rings, where it witnesses psi^p(x) = x^p mod p.
IntegralityReport binomial_integrality_check(const Elem& x, unsigned n_max);

Elem random_elem(const RingPtr& r, std::mt19937_64& rng);
Elem parse_elem(const RingPtr& r, const std::string& text);

}  // namespace wittkit
