#include "wittkit/necklace.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wittkit/errors.hpp"

using namespace wittkit;

namespace {

NeckVec random_neck(const RingPtr& r, std::size_t n, std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_elem(r, rng));
  return NeckVec(r, std::move(c));
}

WittVec random_witt(const RingPtr& r, std::size_t n, std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_elem(r, rng));
  return WittVec(r, std::move(c));
}

NeckVec ints(const RingPtr& r, std::vector<long> v) {
  std::vector<Elem> c;
  for (long x : v) c.push_back(Elem::integer(r, x));
  return NeckVec(r, std::move(c));
}

NeckVec prefix(const NeckVec& x, std::size_t n) {
  std::vector<Elem> c(x.coords().begin(), x.coords().begin() + n);
  return NeckVec(x.ring(), std::move(c));
}

NeckVec times(const NeckVec& x, unsigned n) {
  NeckVec s = NeckVec::zero(x.ring(), x.order());
  for (unsigned i = 0; i < n; ++i) s = s + x;
  return s;
}

}  // namespace

TEST_CASE("necklace count vectors and their ghosts") {
  auto Z = Ring::integers();
  auto m2 = NeckVec::m_vector(Elem::integer(Z, 2), 10);
  CHECK(m2 == ints(Z, {2, 1, 2, 3, 6, 9, 18, 30, 56, 99}));
  auto g = prefix(m2, 6).ghost();
  CHECK(g == ints(Z, {2, 4, 8, 16, 32, 64}).coords());
  CHECK(NeckVec::m_vector(Elem::one(Z), 5) == NeckVec::one(Z, 5));

  // single support: ghost reads the adams tower
  auto F = Ring::free_lambda(6);
  Elem p1(F, Poly::variable(1));
  NeckVec single(F, {p1, Elem::zero(F), Elem::zero(F), Elem::zero(F)});
  auto gf = single.ghost();
  CHECK(gf[0] == p1);
  CHECK(gf[1] == Elem(F, Poly::variable(2)));
  CHECK(gf[2] == Elem(F, Poly::variable(3)));
  CHECK(gf[3] == Elem(F, Poly::variable(4)));

  CHECK(NeckVec::one(Z, 4).verschiebung(2).ghost() == ints(Z, {0, 2, 0, 2}).coords());
}

TEST_CASE("componentwise sums, coupled products") {
  auto Z = Ring::integers();
  CHECK(ints(Z, {1, 1, 0, 0}) * ints(Z, {0, 1, 0, 0}) == ints(Z, {0, 3, 0, 0}));
  CHECK(ints(Z, {0, 1, 0, 0, 0, 0}) * ints(Z, {0, 0, 1, 0, 0, 0}) ==
        ints(Z, {0, 0, 0, 0, 0, 1}));

  std::mt19937_64 rng(421);
  auto F = Ring::free_lambda(10);
  for (int trial = 0; trial < 8; ++trial) {
    auto b = random_neck(Z, 12, rng);
    CHECK(b * NeckVec::one(Z, 12) == b);
    auto c = random_neck(F, 8, rng);
    CHECK(c * NeckVec::one(F, 8) == c);
    CHECK(b + ints(Z, std::vector<long>(12, 0)) == b);
  }
  CHECK_THROWS_AS(ints(Z, {1}) * ints(Z, {1, 2}), ConfigError);
}

TEST_CASE("ghost map is a pointwise ring homomorphism") {
  std::mt19937_64 rng(422);
  auto Z = Ring::integers();
  auto F = Ring::free_lambda(12);
  for (int trial = 0; trial < 8; ++trial) {
    auto b = random_neck(Z, 16, rng);
    auto c = random_neck(Z, 16, rng);
    auto gb = b.ghost(), gc = c.ghost(), gs = (b + c).ghost(), gp = (b * c).ghost();
    for (std::size_t i = 0; i < 16; ++i) {
      CHECK(gs[i] == gb[i] + gc[i]);
      CHECK(gp[i] == gb[i] * gc[i]);
    }
    CHECK(NeckVec::from_ghost(Z, gb) == b);
  }
  for (int trial = 0; trial < 4; ++trial) {
    auto b = random_neck(F, 10, rng);
    auto c = random_neck(F, 10, rng);
    auto gb = b.ghost(), gc = c.ghost(), gp = (b * c).ghost();
    for (std::size_t i = 0; i < 10; ++i) CHECK(gp[i] == gb[i] * gc[i]);
    CHECK(NeckVec::from_ghost(F, gb) == b);
  }
}

TEST_CASE("correspondence with witt vectors") {
  auto Z = Ring::integers();
  auto two = Elem::integer(Z, 2);
  CHECK(necklace_from_witt(WittVec::teichmuller(two, 8)) == NeckVec::m_vector(two, 8));
  CHECK(witt_from_necklace(NeckVec::m_vector(two, 8)) == WittVec::teichmuller(two, 8));

  auto F = Ring::free_lambda(8);
  Elem p1(F, Poly::variable(1));
  CHECK(necklace_from_witt(WittVec::teichmuller(p1, 6)) == NeckVec::m_vector(p1, 6));

  std::mt19937_64 rng(423);
  for (int trial = 0; trial < 8; ++trial) {
    auto x = random_witt(Z, 12, rng);
    auto y = random_witt(Z, 12, rng);
    CHECK(witt_from_necklace(necklace_from_witt(x)) == x);
    CHECK(necklace_from_witt(x + y) == necklace_from_witt(x) + necklace_from_witt(y));
    CHECK(necklace_from_witt(x * y) == necklace_from_witt(x) * necklace_from_witt(y));
    // ghost components agree across the correspondence
    CHECK(necklace_from_witt(x).ghost() == x.ghost());
  }
  for (int trial = 0; trial < 3; ++trial) {
    auto x = random_witt(F, 8, rng);
    auto y = random_witt(F, 8, rng);
    CHECK(witt_from_necklace(necklace_from_witt(x)) == x);
    CHECK(necklace_from_witt(x * y) == necklace_from_witt(x) * necklace_from_witt(y));
    CHECK(necklace_from_witt(x).ghost() == x.ghost());
  }
}

TEST_CASE("shift and trace operators on necklace vectors") {
  auto Z = Ring::integers();
  auto F = Ring::free_lambda(16);
  std::mt19937_64 rng(424);

  auto m2 = NeckVec::m_vector(Elem::integer(Z, 2), 12);
  CHECK(m2.frobenius(2) == NeckVec::m_vector(Elem::integer(Z, 4), 6));
  CHECK(m2.frobenius(3) == NeckVec::m_vector(Elem::integer(Z, 8), 4));
  Elem p1(F, Poly::variable(1));
  CHECK(NeckVec::m_vector(p1, 8).frobenius(2) ==
        NeckVec::m_vector(Elem(F, Poly::variable(1, 2)), 4));

  // V_2 M(a) V_3 M(b) = V_6 M(a^3 b^2): the exponents cross, matching the
  // ghost components 6 a^{n/2} b^{n/3}
  auto va = NeckVec::m_vector(Elem::integer(Z, 2), 12).verschiebung(2);
  auto vb = NeckVec::m_vector(Elem::integer(Z, 3), 12).verschiebung(3);
  CHECK(va * vb == NeckVec::m_vector(Elem::integer(Z, 72), 12).verschiebung(6));
  // V_2 M(a) V_2 M(b) = 2 V_2 M(ab)
  auto v2b = NeckVec::m_vector(Elem::integer(Z, 3), 12).verschiebung(2);
  CHECK(va * v2b ==
        times(NeckVec::m_vector(Elem::integer(Z, 6), 12).verschiebung(2), 2));

  for (int trial = 0; trial < 6; ++trial) {
    auto b = random_neck(Z, 12, rng);
    CHECK(b.verschiebung(2).frobenius(2) == times(prefix(b, 6), 2));
    CHECK(b.frobenius(2).frobenius(3) == b.frobenius(6));
    CHECK(b.verschiebung(2).verschiebung(3) == b.verschiebung(6));
    CHECK(b.verschiebung(3).frobenius(2) == b.frobenius(2).verschiebung(3));
    CHECK(b.verschiebung(6).frobenius(2) == prefix(times(b.verschiebung(3), 2), 6));
    // frobenius respects both operations, verschiebung addition
    auto c = random_neck(Z, 12, rng);
    CHECK((b + c).frobenius(3) == b.frobenius(3) + c.frobenius(3));
    CHECK((b * c).frobenius(3) == b.frobenius(3) * c.frobenius(3));
    CHECK((b + c).verschiebung(4) == b.verschiebung(4) + c.verschiebung(4));
  }
  for (int trial = 0; trial < 3; ++trial) {
    auto b = random_neck(F, 12, rng);
    auto c = random_neck(F, 12, rng);
    CHECK(b.verschiebung(2).frobenius(2) == times(prefix(b, 6), 2));
    CHECK((b * c).frobenius(2) == b.frobenius(2) * c.frobenius(2));
    CHECK(b.frobenius(2).frobenius(2) == b.frobenius(4));
  }

  // operators travel across the witt correspondence
  for (int trial = 0; trial < 4; ++trial) {
    auto x = random_witt(Z, 12, rng);
    CHECK(necklace_from_witt(x.verschiebung(3)) ==
          necklace_from_witt(x).verschiebung(3));
    CHECK(necklace_from_witt(x.frobenius(2)) == necklace_from_witt(x).frobenius(2));
  }
}

TEST_CASE("naturality under coefficient specialisation") {
  // evaluating every free generator at 3 is a map compatible with the adams
  // operations; the cap is far beyond any weight reached here, so products
  // never truncate
  auto F = Ring::free_lambda(500);
  auto Q = Ring::rationals();
  auto down = [&](const Elem& e) {
    return Elem::rational(Q, oracles::eval_poly(e.poly(), [](VarId) { return Rat(3); }));
  };
  auto down_neck = [&](const NeckVec& b) {
    std::vector<Elem> c;
    for (const Elem& e : b.coords()) c.push_back(down(e));
    return NeckVec(Q, std::move(c));
  };
  std::mt19937_64 rng(425);
  for (int trial = 0; trial < 6; ++trial) {
    auto x = random_witt(F, 8, rng);
    std::vector<Elem> xc;
    for (const Elem& e : x.coords()) xc.push_back(down(e));
    WittVec xq(Q, std::move(xc));
    CHECK(down_neck(necklace_from_witt(x)) == necklace_from_witt(xq));
    // ghost components specialise the same way
    auto g = necklace_from_witt(x).ghost();
    auto gq = necklace_from_witt(xq).ghost();
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(down(g[i]) == gq[i]);
  }
}

TEST_CASE("alphabet identities") {
  for (const auto& check : necklace_identity_checks(8)) {
    CAPTURE(check.name);
    CHECK(check.ok);
  }
}
