#include "wittkit/witt.hpp"

#include <utility>

#include "wittkit/errors.hpp"
#include "wittkit/numth.hpp"

namespace wittkit {

namespace {

void require_compatible(const WittVec& a, const WittVec& b) {
  if (a.order() != b.order())
    throw ConfigError("witt vectors have different truncation orders");
  if (a.order() > 0) require_same_ring(a.coord(1), b.coord(1));
}

}  // namespace

WittVec::WittVec(RingPtr ring, std::vector<Elem> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  for (const Elem& c : coords_)
    if (c.ring() != ring_) throw ConfigError("witt coordinate from the wrong ring");
}

WittVec WittVec::zero(const RingPtr& ring, std::size_t order) {
  return WittVec(ring, std::vector<Elem>(order, Elem::zero(ring)));
}

WittVec WittVec::teichmuller(const Elem& r, std::size_t order) {
  std::vector<Elem> c(order, Elem::zero(r.ring()));
  if (order > 0) c[0] = r;
  return WittVec(r.ring(), std::move(c));
}

std::vector<Elem> WittVec::ghost() const {
  std::vector<Elem> w;
  w.reserve(order());
  for (std::size_t n = 1; n <= order(); ++n) {
    Elem s = Elem::zero(ring_);
    for (long d : divisors(static_cast<long>(n)))
      s += coord(d).pow(static_cast<unsigned>(n / d)).scaled(Rat(d));
    w.push_back(std::move(s));
  }
  return w;
}

WittVec WittVec::from_ghost(const RingPtr& ring, const std::vector<Elem>& w) {
  std::vector<Elem> a;
  a.reserve(w.size());
  for (std::size_t n = 1; n <= w.size(); ++n) {
    Elem rest = Elem::zero(ring);
    for (long d : divisors(static_cast<long>(n)))
      if (d < static_cast<long>(n))
        rest += a[d - 1].pow(static_cast<unsigned>(n / d)).scaled(Rat(d));
    a.push_back((w[n - 1] - rest).divided_exact(static_cast<long>(n)));
  }
  return WittVec(ring, std::move(a));
}

WittVec WittVec::operator+(const WittVec& o) const {
  require_compatible(*this, o);
  auto wa = ghost(), wb = o.ghost();
  for (std::size_t i = 0; i < wa.size(); ++i) wa[i] += wb[i];
  return from_ghost(ring_, wa);
}

WittVec WittVec::operator-(const WittVec& o) const { return *this + (-o); }

WittVec WittVec::operator*(const WittVec& o) const {
  require_compatible(*this, o);
  auto wa = ghost(), wb = o.ghost();
  for (std::size_t i = 0; i < wa.size(); ++i) wa[i] *= wb[i];
  return from_ghost(ring_, wa);
}

WittVec WittVec::operator-() const {
  auto w = ghost();
  for (Elem& x : w) x = -x;
  return from_ghost(ring_, w);
}

WittVec WittVec::verschiebung(unsigned r) const {
  if (r == 0) throw ConfigError("verschiebung index must be positive");
  std::vector<Elem> c(order(), Elem::zero(ring_));
  for (std::size_t k = 1; k * r <= order(); ++k) c[k * r - 1] = coord(k);
  return WittVec(ring_, std::move(c));
}

WittVec WittVec::frobenius(unsigned r) const {
  if (r == 0) throw ConfigError("frobenius index must be positive");
  auto w = ghost();
  std::vector<Elem> sub;
  sub.reserve(order() / r);
  for (std::size_t n = 1; n * r <= order(); ++n) sub.push_back(w[n * r - 1]);
  return from_ghost(ring_, sub);
}

bool WittVec::operator==(const WittVec& o) const {
  return ring_ == o.ring_ && coords_ == o.coords_;
}

std::string WittVec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

}  // namespace wittkit
