#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "wittkit/rational.hpp"

namespace wittkit {

inline std::vector<long> divisors(long n) {
  std::vector<long> low, high;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline int moebius(long n) {
  int primes = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

inline long gcd_of(long a, long b) { return std::gcd(a, b); }
inline long lcm_of(long a, long b) { return std::lcm(a, b); }

// All partitions of n as weakly decreasing part lists; n = 0 gives the empty partition.
inline std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Order of the centraliser of the cycle type: prod i^{m_i} m_i!.
inline Int centraliser_order(const std::vector<int>& partition) {
  Int z = 1;
  int run = 0;
  for (size_t i = 0; i < partition.size(); ++i) {
    ++run;
    z *= partition[i];
    if (i + 1 == partition.size() || partition[i + 1] != partition[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

inline Int sigma_power(long n, int k) {
  Int s = 0;
  for (long d : divisors(n)) {
    Int t(d);
    Int p = 1;
    for (int i = 0; i < k; ++i) p *= t;
    s += p;
  }
  return s;
}

}  // namespace wittkit
