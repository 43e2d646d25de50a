#include "wittkit/ring.hpp"

#include <sstream>

namespace wittkit {

RingPtr Ring::integers() {
  static RingPtr r(new Ring(RingKind::Integers, -1, 0, AdamsAction::Identity));
  return r;
}

RingPtr Ring::rationals() {
  static RingPtr r(new Ring(RingKind::Rationals, -1, 0, AdamsAction::Identity));
  return r;
}

RingPtr Ring::free_lambda(int degree_cap) {
  if (degree_cap < 1) throw ConfigError("free lambda ring needs degree cap >= 1");
  return RingPtr(new Ring(RingKind::FreeLambda, degree_cap, degree_cap, AdamsAction::VarPower));
}

RingPtr Ring::polynomials(int var_count, AdamsAction action) {
  if (var_count < 1) throw ConfigError("polynomial ring needs at least one variable");
  return RingPtr(new Ring(RingKind::Polynomials, -1, var_count, action));
}

RingPtr Ring::binomial_over(const RingPtr& base) {
  switch (base->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return base;  // Adams operations are already trivial
    case RingKind::Polynomials:
      return polynomials(base->var_count(), AdamsAction::Identity);
    case RingKind::FreeLambda:
      throw ConfigError("wrap the polynomial carrier, not the free lambda structure");
  }
  throw ConfigError("unknown ring kind");
}

bool Ring::same(const Ring& o) const {
  return kind_ == o.kind_ && degree_cap_ == o.degree_cap_ && var_count_ == o.var_count_ &&
         adams_ == o.adams_;
}

Grading Ring::grading() const {
  if (kind_ == RingKind::FreeLambda)
    return Grading{[](VarId v) { return static_cast<long>(v); }, degree_cap_};
  return untruncated();
}

std::string Ring::describe() const {
  switch (kind_) {
    case RingKind::Integers:
      return "int";
    case RingKind::Rationals:
      return "rat";
    case RingKind::FreeLambda:
      return "free:" + std::to_string(degree_cap_);
    case RingKind::Polynomials: {
      std::string a = adams_ == AdamsAction::VarPower ? "rank-one" : "binomial";
      return "poly[" + std::to_string(var_count_) + "," + a + "]";
    }
  }
  return "?";
}

std::string Ring::var_name(VarId v) const {
  if (kind_ == RingKind::FreeLambda) return "p" + std::to_string(v);
  return "x" + std::to_string(v);
}

Elem::Elem(RingPtr r, Rat v) : ring_(std::move(r)), value_(std::move(v)) {
  if (ring_->uses_poly()) value_ = Poly::constant(std::get<Rat>(value_));
}

Elem::Elem(RingPtr r, Poly v) : ring_(std::move(r)), value_(std::move(v)) {
  if (!ring_->uses_poly()) throw ConfigError("polynomial value in a scalar ring");
}

Elem Elem::zero(const RingPtr& r) { return Elem(r, Rat(0)); }
Elem Elem::one(const RingPtr& r) { return Elem(r, Rat(1)); }
Elem Elem::integer(const RingPtr& r, long n) { return Elem(r, Rat(n)); }
Elem Elem::rational(const RingPtr& r, const Rat& q) {
  if (r->integral() && !is_integer(q))
    throw IntegralityError("value " + format_rational(q) + " is not an integer");
  return Elem(r, q);
}

bool Elem::is_zero() const {
  return ring_->uses_poly() ? poly().is_zero() : rat() == 0;
}

bool Elem::is_one() const {
  if (!ring_->uses_poly()) return rat() == 1;
  return poly().is_constant() && poly().constant_term() == 1;
}

Elem Elem::operator+(const Elem& o) const {
  require_same_ring(*this, o);
  if (ring_->uses_poly()) return Elem(ring_, poly() + o.poly());
  return Elem(ring_, rat() + o.rat());
}

Elem Elem::operator-(const Elem& o) const {
  require_same_ring(*this, o);
  if (ring_->uses_poly()) return Elem(ring_, poly() - o.poly());
  return Elem(ring_, rat() - o.rat());
}

Elem Elem::operator*(const Elem& o) const {
  require_same_ring(*this, o);
  if (ring_->uses_poly()) {
    Grading g = ring_->grading();
    return Elem(ring_, poly().mul(o.poly(), g.cap >= 0 ? &g : nullptr));
  }
  return Elem(ring_, rat() * o.rat());
}

Elem Elem::operator-() const {
  if (ring_->uses_poly()) return Elem(ring_, -poly());
  return Elem(ring_, Rat(-rat()));
}

Elem Elem::scaled(const Rat& c) const {
  if (ring_->uses_poly()) return Elem(ring_, poly().scaled(c));
  return Elem(ring_, Rat(rat() * c));
}

Elem Elem::divided_exact(long n) const {
  if (n == 0) throw ConfigError("division by zero");
  Rat inv(1, n);
  inv.canonicalize();
  return scaled(inv).retracted();
}

Elem Elem::pow(unsigned k) const {
  if (ring_->uses_poly()) {
    Grading g = ring_->grading();
    return Elem(ring_, poly().pow(k, g.cap >= 0 ? &g : nullptr));
  }
  Rat r = 1;
  Rat base = rat();
  for (unsigned i = 0; i < k; ++i) r *= base;
  return Elem(ring_, r);
}

Elem Elem::adams(unsigned n) const {
  if (n == 0) throw ConfigError("adams operation needs n >= 1");
  if (n == 1 || !ring_->uses_poly()) return *this;
  switch (ring_->adams_action()) {
    case AdamsAction::Identity:
      return *this;
    case AdamsAction::VarPower: {
      Grading g = ring_->grading();
      const Grading* gp = g.cap >= 0 ? &g : nullptr;
      if (ring_->kind() == RingKind::FreeLambda) {
        // p_k -> p_{nk}; beyond the cap the generator itself truncates to zero.
        return Elem(ring_, poly().vars_mapped([n](VarId v) { return v * n; }, gp));
      }
      return Elem(ring_, poly().exponents_scaled(n, gp));
    }
  }
  throw ConfigError("unknown adams action");
}

Elem Elem::retracted() const {
  if (!ring_->integral()) return *this;
  if (!is_integer(rat()))
    throw IntegralityError("value " + format_rational(rat()) + " left the integers");
  return *this;
}

bool Elem::integral_value() const {
  if (ring_->uses_poly()) return poly().all_coefficients_integral();
  return is_integer(rat());
}

bool Elem::operator==(const Elem& o) const {
  require_same_ring(*this, o);
  if (ring_->uses_poly()) return poly() == o.poly();
  return rat() == o.rat();
}

std::string Elem::str() const {
  if (ring_->uses_poly())
    return poly().str([this](VarId v) { return ring_->var_name(v); });
  return format_rational(rat());
}

void require_same_ring(const Elem& a, const Elem& b) {
  if (!a.valid() || !b.valid()) throw ConfigError("uninitialised ring element");
  if (!a.ring()->same(*b.ring()))
    throw ConfigError("ring mismatch: " + a.ring()->describe() + " vs " + b.ring()->describe());
}

std::vector<Elem> lambda_list(const Elem& x, unsigned n) {
  std::vector<Elem> lam{Elem::one(x.ring())};
  std::vector<Elem> psi{Elem()};  // psi[i] = psi^i(x), 1-based
  for (unsigned i = 1; i <= n; ++i) psi.push_back(x.adams(i));
  for (unsigned m = 1; m <= n; ++m) {
    Elem acc = Elem::zero(x.ring());
    for (unsigned i = 1; i <= m; ++i) {
      Elem t = psi[i] * lam[m - i];
      acc += (i % 2 == 1) ? t : -t;
    }
    lam.push_back(acc.divided_exact(m));
  }
  return lam;
}

Elem lambda_op(const Elem& x, unsigned n) { return lambda_list(x, n).back(); }

std::vector<Elem> symmetric_power_list(const Elem& x, unsigned n) {
  std::vector<Elem> sym{Elem::one(x.ring())};
  std::vector<Elem> psi{Elem()};
  for (unsigned i = 1; i <= n; ++i) psi.push_back(x.adams(i));
  for (unsigned m = 1; m <= n; ++m) {
    Elem acc = Elem::zero(x.ring());
    for (unsigned i = 1; i <= m; ++i) acc += psi[i] * sym[m - i];
    sym.push_back(acc.divided_exact(m));
  }
  return sym;
}

Elem symmetric_power(const Elem& x, unsigned n) { return symmetric_power_list(x, n).back(); }

Elem necklace_poly(const Elem& x, unsigned n) {
  if (n == 0) throw ConfigError("necklace polynomial needs n >= 1");
  Elem acc = Elem::zero(x.ring());
  for (long d : divisors(n)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    Elem t = x.pow(n / d).adams(d);
    acc += mu == 1 ? t : -t;
  }
  return acc.divided_exact(n);
}

IntegralityReport binomial_integrality_check(const Elem& x, unsigned n_max) {
  IntegralityReport rep;
  for (unsigned n = 1; n <= n_max; ++n) {
    Elem acc = Elem::zero(x.ring());
    for (long d : divisors(n)) {
      int mu = moebius(d);
      if (mu == 0) continue;
      Elem t = x.pow(n / d);
      acc += mu == 1 ? t : -t;
    }
    Elem v = acc.scaled(Rat(1, n));
    bool ok = v.integral_value();
    rep.rows.push_back({n, v.str(), ok});
    rep.all_integral = rep.all_integral && ok;
  }
  return rep;
}

Elem random_elem(const RingPtr& r, std::mt19937_64& rng) {
  auto small = [&rng](long lo, long hi) {
    return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
  };
  switch (r->kind()) {
    case RingKind::Integers:
      return Elem::integer(r, small(-9, 9));
    case RingKind::Rationals: {
      Rat q(small(-9, 9), small(1, 4));
      q.canonicalize();
      return Elem(r, q);
    }
    case RingKind::FreeLambda:
    case RingKind::Polynomials: {
      Poly p;
      int terms = static_cast<int>(small(1, 3));
      int vmax = r->var_count();
      for (int t = 0; t < terms; ++t) {
        Mono m;
        int factors = static_cast<int>(small(0, 2));
        for (int f = 0; f < factors; ++f) {
          VarId v = static_cast<VarId>(small(1, std::min(vmax, 3)));
          m = m * Mono::variable(v);
        }
        p.add_term(m, Rat(small(-3, 3)));
      }
      Grading g = r->grading();
      if (g.cap >= 0) p = p.truncated(g);
      return Elem(r, std::move(p));
    }
  }
  throw ConfigError("unknown ring kind");
}

Elem parse_elem(const RingPtr& r, const std::string& text) {
  if (r->uses_poly()) throw ParseError("literals are only parsed for scalar rings");
  return Elem::rational(r, parse_rational(text));
}

}  // namespace wittkit
