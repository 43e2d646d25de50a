#include "wittkit/symfunc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace wittkit {

Grading power_grading(long cap) {
  return Grading{[](VarId v) { return static_cast<long>(v); }, cap};
}

Poly sym_truncated(const Poly& f, long cap) {
  if (cap < 0) return f;
  return f.truncated(power_grading(cap));
}

Poly sym_mul(const Poly& f, const Poly& g, long cap) {
  Grading gr = power_grading(cap);
  return f.mul(g, cap >= 0 ? &gr : nullptr);
}

Poly sym_pow(const Poly& f, unsigned k, long cap) {
  Grading gr = power_grading(cap);
  return f.pow(k, cap >= 0 ? &gr : nullptr);
}

Poly adams_scaled(const Poly& f, unsigned k, long cap) {
  if (k == 0) throw ConfigError("adams index must be positive");
  Grading gr = power_grading(cap);
  return f.vars_mapped([k](VarId v) { return v * k; }, cap >= 0 ? &gr : nullptr);
}

Poly exp_series(const Poly& f, const Grading& g) {
  if (f.constant_term() != 0) throw ConfigError("exp needs zero constant term");
  if (g.cap < 0) throw ConfigError("exp needs a finite degree cap");
  Poly sum = Poly::constant(1), term = Poly::constant(1);
  for (long k = 1; k <= g.cap; ++k) {
    term = term.mul(f, &g).scaled(Rat(1, k));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

Poly log1p_series(const Poly& f, const Grading& g) {
  if (f.constant_term() != 0) throw ConfigError("log needs zero constant term");
  if (g.cap < 0) throw ConfigError("log needs a finite degree cap");
  Poly sum, pw = Poly::constant(1);
  for (long k = 1; k <= g.cap; ++k) {
    pw = pw.mul(f, &g);
    if (pw.is_zero()) break;
    sum += pw.scaled(Rat(k % 2 ? 1 : -1, k));
  }
  return sum;
}

namespace {

// One lock guards all four Newton memos; entries are append-only.
std::mutex newton_mu;

enum class NewtonKind { PInH, HInP, EInP, PInE };

Poly newton(NewtonKind kind, unsigned n) {
  if (n == 0) throw ConfigError("generator index must be positive");
  static std::map<NewtonKind, std::vector<Poly>> memos;
  std::scoped_lock lk(newton_mu);
  auto& memo = memos[kind];
  if (memo.empty()) memo.push_back(Poly::constant(1));  // index 0: h_0 = e_0 = 1
  while (memo.size() <= n) {
    unsigned m = static_cast<unsigned>(memo.size());
    Poly acc;
    switch (kind) {
      case NewtonKind::PInH:
        // p_m = m h_m - sum_{i<m} p_i h_{m-i}
        acc = Poly::variable(m).scaled(m);
        for (unsigned i = 1; i < m; ++i) acc -= memo[i] * Poly::variable(m - i);
        break;
      case NewtonKind::HInP:
        for (unsigned i = 1; i <= m; ++i) acc += Poly::variable(i) * memo[m - i];
        acc = acc.scaled(Rat(1, m));
        break;
      case NewtonKind::EInP:
        for (unsigned i = 1; i <= m; ++i) {
          Poly t = Poly::variable(i) * memo[m - i];
          acc += i % 2 ? t : -t;
        }
        acc = acc.scaled(Rat(1, m));
        break;
      case NewtonKind::PInE:
        // p_m = sum_{i<m} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
        for (unsigned i = 1; i < m; ++i) {
          Poly t = Poly::variable(i) * memo[m - i];
          acc += i % 2 ? t : -t;
        }
        acc += Poly::variable(m).scaled(m % 2 ? long(m) : -long(m));
        break;
    }
    memo.push_back(std::move(acc));
  }
  return memo[n];
}

Poly substitute_generators(const Poly& f, const std::function<Poly(unsigned)>& img, long cap) {
  std::map<VarId, Poly> images;
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.factors)
      if (!images.count(v)) images.emplace(v, img(v));
  Grading g = power_grading(cap);
  return f.substituted([&](VarId v) { return &images.at(v); }, cap >= 0 ? &g : nullptr);
}

}  // namespace

Poly power_in_complete(unsigned n) { return newton(NewtonKind::PInH, n); }
Poly complete_in_power(unsigned n) { return newton(NewtonKind::HInP, n); }
Poly elementary_in_power(unsigned n) { return newton(NewtonKind::EInP, n); }
Poly power_in_elementary(unsigned n) { return newton(NewtonKind::PInE, n); }

Poly convert_basis(const Poly& f, SymBasis from, SymBasis to, long cap) {
  if (from == to) return sym_truncated(f, cap);
  Poly in_p = f;
  if (from == SymBasis::Complete)
    in_p = substitute_generators(f, complete_in_power, cap);
  else if (from == SymBasis::Elementary)
    in_p = substitute_generators(f, elementary_in_power, cap);
  if (to == SymBasis::Power) return sym_truncated(in_p, cap);
  return substitute_generators(in_p, to == SymBasis::Complete ? power_in_complete : power_in_elementary,
                               cap);
}

Poly plethysm_family(const Poly& outer, const std::function<Poly(unsigned)>& images, long cap) {
  std::map<VarId, Poly> slots;
  for (const auto& [m, c] : outer.terms())
    for (const auto& [v, e] : m.factors)
      if (!slots.count(v)) {
        Poly im = images(v);
        if (im.constant_term() != 0)
          throw ConfigError("plethysm inner term needs zero constant term");
        slots.emplace(v, std::move(im));
      }
  Grading g = power_grading(cap);
  return outer.substituted([&](VarId v) { return &slots.at(v); }, cap >= 0 ? &g : nullptr);
}

Poly plethysm(const Poly& outer, const Poly& inner, long cap) {
  return plethysm_family(
      outer, [&](unsigned k) { return adams_scaled(inner, k, cap); }, cap);
}

Poly complete_series(long cap) {
  Poly acc = Poly::constant(1);
  for (long n = 1; n <= cap; ++n) acc += complete_in_power(static_cast<unsigned>(n));
  return acc;
}

Poly signed_complete_series(long cap) {
  Poly acc = Poly::constant(1);
  for (long n = 1; n <= cap; ++n) {
    Poly h = complete_in_power(static_cast<unsigned>(n));
    acc += n % 2 ? -h : h;
  }
  return acc;
}

Poly moebius_series(long cap) {
  Poly acc;
  for (long n = 1; n <= cap; ++n)
    for (long d : divisors(n)) {
      int mu = moebius(d);
      if (mu == 0) continue;
      acc += Poly::variable(static_cast<VarId>(d), static_cast<std::uint32_t>(n / d))
                 .scaled(Rat(mu, n));
    }
  return acc;
}

Poly signed_moebius_series(long cap) {
  Poly acc;
  for (long n = 1; n <= cap; ++n)
    for (long d : divisors(n)) {
      int mu = moebius(d);
      if (mu == 0) continue;
      int sign = (n / d) % 2 ? -mu : mu;
      acc += Poly::variable(static_cast<VarId>(d), static_cast<std::uint32_t>(n / d))
                 .scaled(Rat(sign, n));
    }
  return acc;
}

long ramanujan_sum(long k, long d) {
  if (k < 1 || d < 1) throw ConfigError("ramanujan sum needs positive arguments");
  long s = 0;
  for (long e : divisors(gcd_of(k, d))) s += e * moebius(d / e);
  return s;
}

Poly lk_series(long k, long cap) {
  Poly acc;
  for (long n = 1; n <= cap; ++n)
    for (long d : divisors(n)) {
      long c = ramanujan_sum(k, d);
      if (c == 0) continue;
      Rat coeff(c, n);
      coeff.canonicalize();
      acc += Poly::variable(static_cast<VarId>(d), static_cast<std::uint32_t>(n / d)).scaled(coeff);
    }
  return acc;
}

Elem necklace_sym(const RingPtr& ring, const std::vector<Elem>& letters, unsigned k) {
  if (k == 0) throw ConfigError("necklace index must be positive");
  for (const auto& x : letters)
    if (!x.ring()->same(*ring)) throw ConfigError("alphabet letter from a different ring");
  Elem acc = Elem::zero(ring);
  for (long d : divisors(k)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    Elem ps = Elem::zero(ring);
    for (const auto& x : letters) ps += x.pow(static_cast<unsigned>(d));
    Elem t = ps.pow(k / static_cast<unsigned>(d));
    acc += mu == 1 ? t : -t;
  }
  return acc.divided_exact(k);
}

VarId slot_var(unsigned adams_index, unsigned slot) {
  if (adams_index == 0 || slot == 0 || slot >= 1024 || adams_index >= (1u << 21))
    throw ConfigError("slot index out of range");
  return (static_cast<VarId>(adams_index) << 10) | slot;
}

Grading slot_grading(long cap) {
  return Grading{[](VarId v) { return static_cast<long>((v >> 10) * (v & 1023)); }, cap};
}

Poly slot_adams(const Poly& f, unsigned k, long cap) {
  if (k == 0) throw ConfigError("adams index must be positive");
  Grading g = slot_grading(cap);
  return f.vars_mapped([k](VarId v) { return slot_var((v >> 10) * k, v & 1023); },
                       cap >= 0 ? &g : nullptr);
}

bool slot_fixed_point_check(long cap) {
  if (cap < 1) throw ConfigError("fixed point check needs a positive cap");
  Grading g = slot_grading(cap);
  Poly c;
  for (long n = 1; n <= cap; ++n)
    c += Poly::variable(slot_var(1, static_cast<unsigned>(n))).scaled(Rat(1, n));
  Poly a = exp_series(c, g);

  Poly b;
  for (long i = 1; i <= cap; ++i)
    for (long d : divisors(i)) {
      int mu = moebius(d);
      if (mu == 0) continue;
      b += Poly::variable(slot_var(static_cast<unsigned>(d), static_cast<unsigned>(i / d)))
               .scaled(Rat(mu, i));
    }

  std::map<VarId, Poly> images;
  for (long n = 1; n <= cap; ++n)
    images.emplace(slot_var(1, static_cast<unsigned>(n)),
                   slot_adams(b, static_cast<unsigned>(n), cap));
  Poly sub = a.substituted(
      [&](VarId v) -> const Poly* {
        auto it = images.find(v);
        return it == images.end() ? nullptr : &it->second;
      },
      &g);
  return sub == a;
}

namespace {

std::mutex universal_mu;

Poly guard_integral(Poly p, const char* what) {
  if (!p.all_coefficients_integral())
    throw std::logic_error(std::string(what) + " fell outside the integers");
  return p;
}

Poly shift_alphabet(const Poly& p) {
  return p.vars_mapped([](VarId v) { return v + kSecondAlphabet; }, nullptr);
}

Poly to_complete_vars(const Poly& in_p) {
  return substitute_generators(in_p, power_in_complete, -1);
}

}  // namespace

Poly product_coeff_poly(unsigned n) {
  static std::map<unsigned, Poly> memo;
  std::scoped_lock lk(universal_mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  Poly acc;
  if (n == 0) {
    acc = Poly::constant(1);
  } else {
    for (const auto& lam : partitions_of(static_cast<int>(n))) {
      Poly pa = Poly::constant(1);
      for (int part : lam) pa = pa * power_in_complete(static_cast<unsigned>(part));
      Rat zinv(Int(1), centraliser_order(lam));
      zinv.canonicalize();
      acc += (pa * shift_alphabet(pa)).scaled(zinv);
    }
    acc = guard_integral(std::move(acc), "product coefficient polynomial");
  }
  memo.emplace(n, acc);
  return acc;
}

Poly exterior_coeff_poly(unsigned n, unsigned m) {
  static std::map<std::pair<unsigned, unsigned>, Poly> memo;
  std::scoped_lock lk(universal_mu);
  auto key = std::make_pair(n, m);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Poly acc;
  if (m == 0) {
    acc = n == 0 ? Poly::constant(1) : Poly();
  } else if (n == 0) {
    acc = Poly::constant(1);
  } else {
    Poly in_p = plethysm(complete_in_power(n), elementary_in_power(m), -1);
    acc = guard_integral(to_complete_vars(in_p), "exterior coefficient polynomial");
  }
  memo.emplace(key, acc);
  return acc;
}

Poly frobenius_coeff_poly(unsigned n, unsigned k) {
  if (n == 0) throw ConfigError("frobenius index must be positive");
  static std::map<std::pair<unsigned, unsigned>, Poly> memo;
  std::scoped_lock lk(universal_mu);
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Poly acc;
  if (k == 0) {
    acc = Poly::constant(1);
  } else {
    Poly in_p = adams_scaled(complete_in_power(k), n, -1);
    acc = guard_integral(to_complete_vars(in_p), "frobenius coefficient polynomial");
  }
  memo.emplace(key, acc);
  return acc;
}

}  // namespace wittkit
