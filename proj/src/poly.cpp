#include "wittkit/poly.hpp"

#include <sstream>

namespace wittkit {

Mono Mono::variable(VarId v, std::uint32_t e) {
  Mono m;
  if (e > 0) m.factors.push_back({v, e});
  return m;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  r.factors.reserve(factors.size() + o.factors.size());
  auto a = factors.begin(), b = o.factors.begin();
  while (a != factors.end() || b != o.factors.end()) {
    if (b == o.factors.end() || (a != factors.end() && a->first < b->first)) {
      r.factors.push_back(*a++);
    } else if (a == factors.end() || b->first < a->first) {
      r.factors.push_back(*b++);
    } else {
      r.factors.push_back({a->first, a->second + b->second});
      ++a, ++b;
    }
  }
  return r;
}

Mono Mono::exponents_scaled(std::uint32_t k) const {
  Mono r = *this;
  for (auto& [v, e] : r.factors) e *= k;
  return r;
}

Mono Mono::vars_mapped(const std::function<VarId(VarId)>& f) const {
  std::map<VarId, std::uint32_t> acc;
  for (auto& [v, e] : factors) acc[f(v)] += e;
  Mono r;
  r.factors.assign(acc.begin(), acc.end());
  return r;
}

long Mono::degree(const std::function<long(VarId)>& weight) const {
  long d = 0;
  for (auto& [v, e] : factors) d += weight(v) * static_cast<long>(e);
  return d;
}

long Mono::total_degree() const {
  long d = 0;
  for (auto& [v, e] : factors) d += e;
  return d;
}

Poly Poly::constant(Rat c) {
  Poly p;
  if (c != 0) p.terms_[Mono::one()] = std::move(c);
  return p;
}

Poly Poly::variable(VarId v, std::uint32_t e) {
  Poly p;
  p.terms_[Mono::variable(v, e)] = 1;
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono::one());
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Mono::one());
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::mul(const Poly& o, const Grading* g) const {
  Poly r;
  for (auto& [ma, ca] : terms_) {
    for (auto& [mb, cb] : o.terms_) {
      Mono m = ma * mb;
      if (g && !g->keeps(m)) continue;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(std::uint32_t k, const Grading* g) const {
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r.mul(base, g);
    k >>= 1;
    if (k > 0) base = base.mul(base, g);
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Poly Poly::truncated(const Grading& g) const {
  Poly r;
  for (auto& [m, c] : terms_)
    if (g.keeps(m)) r.terms_[m] = c;
  return r;
}

Poly Poly::exponents_scaled(std::uint32_t k, const Grading* g) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    Mono s = m.exponents_scaled(k);
    if (g && !g->keeps(s)) continue;
    r.add_term(s, c);
  }
  return r;
}

Poly Poly::vars_mapped(const std::function<VarId(VarId)>& f, const Grading* g) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    Mono s = m.vars_mapped(f);
    if (g && !g->keeps(s)) continue;
    r.add_term(s, c);
  }
  return r;
}

Poly Poly::substituted(const std::function<const Poly*(VarId)>& image, const Grading* g) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    Poly term = Poly::constant(c);
    for (auto& [v, e] : m.factors) {
      const Poly* img = image(v);
      Poly factor = img ? img->pow(e, g) : Poly::variable(v, e);
      term = term.mul(factor, g);
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

long Poly::degree(const std::function<long(VarId)>& weight) const {
  long d = -1;  // zero polynomial
  for (auto& [m, c] : terms_) d = std::max(d, m.degree(weight));
  return d;
}

bool Poly::all_coefficients_integral() const {
  for (auto& [m, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

std::string Poly::str(const std::function<std::string(VarId)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && !m.factors.empty();
    if (!unit) out << format_rational(a);
    bool lead = unit;
    for (auto& [v, e] : m.factors) {
      if (!lead) out << "*";
      lead = false;
      out << name(v);
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace wittkit
