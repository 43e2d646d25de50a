#pragma once

// Principal q-series q^{-1} + f(1)q + f(2)q^2 + ..., their Faber polynomials,
// the two-variable coefficient table H, and the replicate family extracted
// from it.  Everything exact over the rationals.

#include <array>
#include <utility>
#include <vector>

#include "wittkit/rational.hpp"

namespace wittkit {

// Finite window of a Laurent series in one variable.  `hi` is the tracked
// precision, not the support: coefficients above it are unknown, coefficients
// below `lo` are genuinely zero.  Products shrink the window accordingly.
class LaurentSeries {
 public:
  LaurentSeries(long lo, long hi, std::vector<Rat> coeffs);
  static LaurentSeries zero(long hi);
  static LaurentSeries one(long hi);

  long lo() const { return lo_; }
  long hi() const { return hi_; }
  // zero below the window, TruncationError above it
  Rat coeff(long e) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries scaled(const Rat& c) const;
  LaurentSeries truncated(long hi) const;

  bool is_zero() const { return c_.empty(); }
  bool operator==(const LaurentSeries& o) const;
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void trim();
  long lo_, hi_;
  std::vector<Rat> c_;  // c_[e - lo_], first entry nonzero once trimmed
};

// Normalized series: leading term q^{-1}, no constant, tail of length order().
class QSeries {
 public:
  explicit QSeries(std::vector<Rat> tail);

  unsigned order() const { return static_cast<unsigned>(tail_.size()); }
  const std::vector<Rat>& tail() const { return tail_; }
  Rat coeff(unsigned n) const;  // f(n), 1 <= n <= order
  QSeries truncated(unsigned n) const;
  LaurentSeries laurent() const;

  bool operator==(const QSeries& o) const { return tail_ == o.tail_; }
  bool operator!=(const QSeries& o) const { return !(*this == o); }

 private:
  std::vector<Rat> tail_;
};

// Coefficients of the degree-m monic-normalized polynomial X with
// X(f) = (1/m) q^{-m} + O(q); entry k is the t^k coefficient.
std::vector<Rat> faber_polynomial(const QSeries& f, unsigned m);

// The expansion X_m(f) itself, principal part included.
LaurentSeries faber_series(const QSeries& f, unsigned m);

// H(m, n) = coefficient of q^n in X_m(f), tabulated for all mn <= order.
class HTable {
 public:
  explicit HTable(const QSeries& f);
  unsigned order() const { return order_; }
  Rat at(unsigned m, unsigned n) const;

 private:
  unsigned order_;
  std::vector<std::vector<Rat>> rows_;
};

struct ReplicableReport {
  bool replicable = true;
  // first (a,b), (c,d) with ab = cd, gcd(a,b) = gcd(c,d) but different entries
  std::array<unsigned, 4> witness{0, 0, 0, 0};
};

// Scan every pair of cells the duplication property constrains.
ReplicableReport is_replicable(const HTable& t);

struct LogCheckReport {
  bool log_identity_ok = true;  // table == log of the two-variable kernel
  bool multiset_ok = true;      // table == direct multiset coefficient formula
  std::pair<unsigned, unsigned> first_mismatch{0, 0};
};

// Check H against -log(1 - sum f(i) pq (p^i - q^i)/(p - q)) coefficientwise
// for m + n <= degree_cap, both via the series log and term-by-term.
LogCheckReport log_identity_check(const QSeries& f, unsigned degree_cap);

struct ProductReport {
  bool ok = true;
  unsigned p_degree = 0;  // first failing p-degree / q-exponent
  long q_exponent = 0;
};

// prod_m exp(-X_m(f(q)) p^m) over m <= p_max against p f(p) - p f(q),
// coefficients compared through q^q_max at every p-degree <= p_max.
ProductReport difference_product_check(const QSeries& f, unsigned p_max,
                                       unsigned q_max);

// f^(1) = f and, for 2 <= a <= a_max, the series f^(a) solving
// H(m, n) = sum over a | gcd(m, n) of (1/a) f^(a)(mn/a^2), each truncated to
// order/a^2 coefficients.  `consistent` reports whether that relation then
// holds at every cell the extracted data reaches.
class ReplicateFamily {
 public:
  ReplicateFamily(const QSeries& f, unsigned a_max);

  unsigned count() const { return static_cast<unsigned>(reps_.size()); }
  const QSeries& replicate(unsigned a) const;
  bool consistent() const { return consistent_; }
  std::pair<unsigned, unsigned> failure() const { return failure_; }

 private:
  std::vector<QSeries> reps_;
  bool consistent_ = true;
  std::pair<unsigned, unsigned> failure_{0, 0};
};

struct FamilyReport {
  bool substitution_ok = true;
  std::pair<unsigned, unsigned> failed_cell{0, 0};
  std::vector<std::pair<unsigned, ReplicableReport>> replicate_checks;
  bool all_ok() const;
};

// Extract replicates and require each to pass the duplication scan on its
// available order.
FamilyReport completely_replicable_check(const QSeries& f, unsigned a_max);

// Elliptic modular expansion with the constant 744 stripped: coefficient 1 is
// 196884.  Exact integer arithmetic throughout; order capped at 128.
QSeries j_invariant(unsigned order);

}  // namespace wittkit
