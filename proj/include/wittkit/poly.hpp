#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wittkit/rational.hpp"

namespace wittkit {

using VarId = std::uint32_t;

// Monomial as sorted (variable, exponent) pairs with positive exponents.
struct Mono {
  std::vector<std::pair<VarId, std::uint32_t>> factors;

  bool operator==(const Mono&) const = default;
  bool operator<(const Mono& o) const { return factors < o.factors; }

  static Mono one() { return {}; }
  static Mono variable(VarId v, std::uint32_t e = 1);

  Mono operator*(const Mono& o) const;
  Mono exponents_scaled(std::uint32_t k) const;  // x -> x^k on every variable
  Mono vars_mapped(const std::function<VarId(VarId)>& f) const;
  long degree(const std::function<long(VarId)>& weight) const;
  long total_degree() const;
};

// Weighted-degree truncation context; cap < 0 means untruncated.
struct Grading {
  std::function<long(VarId)> weight;
  long cap = -1;

  bool keeps(const Mono& m) const { return cap < 0 || m.degree(weight) <= cap; }
};

inline Grading untruncated() {
  return Grading{[](VarId) { return 1L; }, -1};
}

// Sparse multivariate polynomial over the rationals in canonical form:
// sorted monomials, no zero coefficients, normalised rationals.
class Poly {
 public:
  Poly() = default;

  static Poly constant(Rat c);
  static Poly variable(VarId v, std::uint32_t e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  const std::map<Mono, Rat>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Mono& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  Poly mul(const Poly& o, const Grading* g = nullptr) const;
  Poly operator*(const Poly& o) const { return mul(o); }
  Poly pow(std::uint32_t k, const Grading* g = nullptr) const;
  Poly scaled(const Rat& c) const;

  Poly truncated(const Grading& g) const;
  Poly exponents_scaled(std::uint32_t k, const Grading* g = nullptr) const;
  Poly vars_mapped(const std::function<VarId(VarId)>& f, const Grading* g = nullptr) const;
  // image(v) == nullptr keeps the variable untouched.
  Poly substituted(const std::function<const Poly*(VarId)>& image, const Grading* g = nullptr) const;

  long degree(const std::function<long(VarId)>& weight) const;  // max weighted degree, -1 for 0
  bool all_coefficients_integral() const;

  bool operator==(const Poly&) const = default;

  std::string str(const std::function<std::string(VarId)>& name) const;

 private:
  std::map<Mono, Rat> terms_;
};

}  // namespace wittkit
