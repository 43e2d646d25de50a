#pragma once

#include <gmpxx.h>

#include <string>

#include "wittkit/errors.hpp"

namespace wittkit {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int to_integer(const Rat& x) {
  if (!is_integer(x)) throw IntegralityError("non-integral value " + x.get_str());
  return x.get_num();
}

// Accepts "p", "-p", "p/q"; rejects zero denominators and junk.
inline Rat parse_rational(const std::string& text) {
  auto bad = [&] { return ParseError("bad rational literal '" + text + "'"); };
  std::string s = text;
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw IntegralityError("zero denominator in '" + text + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

inline std::string format_rational(const Rat& x) { return x.get_str(); }

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// C(x, n) for ring-valued x specialised to a rational: x(x-1)...(x-n+1)/n!.
inline Rat binomial_rat(const Rat& x, unsigned n) {
  Rat prod = 1;
  for (unsigned i = 0; i < n; ++i) prod *= x - Rat(i);
  return prod / Rat(factorial(n));
}

// C(x+n-1, n): dimension of the n-th symmetric power of a rank-x object.
inline Rat symmetric_binomial_rat(const Rat& x, unsigned n) {
  return binomial_rat(x + Rat(n) - 1, n);
}

}  // namespace wittkit
