#include "wittkit/lambda1.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "wittkit/errors.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/witt.hpp"

using namespace wittkit;

namespace {

Series1 ints(const RingPtr& r, std::vector<long> v) {
  std::vector<Elem> c;
  for (long x : v) c.push_back(Elem::integer(r, x));
  return Series1(r, std::move(c));
}

std::vector<Elem> random_coords(const RingPtr& r, std::size_t n,
                                std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_elem(r, rng));
  return c;
}

Series1 random_series(const RingPtr& r, std::size_t n, std::mt19937_64& rng) {
  return Series1(r, random_coords(r, n, rng));
}

Series1 truncated(const Series1& f, std::size_t n) {
  std::vector<Elem> c(f.tail().begin(), f.tail().begin() + n);
  return Series1(f.ring(), std::move(c));
}

std::vector<long> longs(const std::vector<Elem>& v) {
  std::vector<long> out;
  for (const Elem& e : v) out.push_back(e.rat().get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto Z = Ring::integers();
  auto two = Series1::geometric(Elem::integer(Z, 2), 6);
  CHECK(longs(two.tail()) == std::vector<long>({2, 4, 8, 16, 32, 64}));

  CHECK(two.oplus(two.reciprocal()) == Series1::one(Z, 6));
  CHECK(two.negated_arg() == Series1::geometric(Elem::integer(Z, -2), 6));

  // (1+t)(1+t) and the two-step peel back
  auto lin = ints(Z, {1, 0, 0, 0});
  CHECK(lin.oplus(lin) == ints(Z, {2, 1, 0, 0}));

  std::mt19937_64 rng(611);
  auto Q = Ring::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_series(Q, 8, rng), g = random_series(Q, 8, rng);
    auto h = random_series(Q, 8, rng);
    CHECK(f.oplus(g) == g.oplus(f));
    CHECK(f.oplus(g).oplus(h) == f.oplus(g.oplus(h)));
    CHECK(f.oplus(f.reciprocal()) == Series1::one(Q, 8));
  }

  CHECK_THROWS_AS(two.oplus(Series1::one(Z, 4)), ConfigError);
  CHECK_THROWS_AS(two.oplus(Series1::one(Q, 6)), ConfigError);
}

TEST_CASE("log-derivative transport") {
  auto Z = Ring::integers();

  CHECK(longs(Series1::geometric(Elem::integer(Z, 3), 5).dlog()) ==
        std::vector<long>({3, 9, 27, 81, 243}));
  CHECK(longs(ints(Z, {0, 1, 0, 1}).dlog()) == std::vector<long>({0, 2, 0, 2}));
  CHECK(longs(ints(Z, {1, 0, 0, 0}).dlog()) == std::vector<long>({1, -1, 1, -1}));

  // exp(t) is not integral
  CHECK_THROWS_AS(
      Series1::from_dlog(Z, {Elem::integer(Z, 1), Elem::zero(Z), Elem::zero(Z)}),
      IntegralityError);

  std::mt19937_64 rng(612);
  auto Q = Ring::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_series(Q, 10, rng), g = random_series(Q, 10, rng);
    CHECK(Series1::from_dlog(Q, f.dlog()) == f);
    // log-derivative turns series product into addition
    auto wf = f.dlog(), wg = g.dlog(), ws = f.oplus(g).dlog();
    for (std::size_t i = 0; i < 10; ++i) CHECK(ws[i] == wf[i] + wg[i]);
  }
}

TEST_CASE("coupled product") {
  auto Z = Ring::integers();
  auto a = Series1::geometric(Elem::integer(Z, 2), 8);
  auto b = Series1::geometric(Elem::integer(Z, 3), 8);
  auto six = Series1::geometric(Elem::integer(Z, 6), 8);
  CHECK(a.star1(b) == six);
  CHECK(a.star1_universal(b) == six);

  // (1+t) squares to the all-ones series
  auto lin = ints(Z, {1, 0, 0, 0});
  CHECK(lin.star1(lin) == ints(Z, {1, 1, 1, 1}));
  CHECK(lin.star1_universal(lin) == ints(Z, {1, 1, 1, 1}));

  std::mt19937_64 rng(613);
  auto Q = Ring::rationals();
  auto one = Series1::geometric(Elem::one(Q), 10);
  for (int trial = 0; trial < 12; ++trial) {
    auto f = random_series(Q, 10, rng), g = random_series(Q, 10, rng);
    auto h = random_series(Q, 10, rng);
    CHECK(f.star1(g) == f.star1_universal(g));
    CHECK(f.star1(g) == g.star1(f));
    CHECK(f.star1(one) == f);
    CHECK(f.star1(g.oplus(h)) == f.star1(g).oplus(f.star1(h)));
  }
}

TEST_CASE("shift and trace on series") {
  auto Z = Ring::integers();
  auto a = Series1::geometric(Elem::integer(Z, 2), 8);
  CHECK(a.verschiebung(2) == ints(Z, {0, 2, 0, 4, 0, 8, 0, 16}));
  CHECK(a.frobenius(2) == Series1::geometric(Elem::integer(Z, 4), 4));
  CHECK(a.frobenius(3) == Series1::geometric(Elem::integer(Z, 8), 2));

  // first trace coefficient is 2a_2 - a_1^2
  CHECK(longs(ints(Z, {1, 3, 0, 0}).frobenius(2).tail()) ==
        std::vector<long>({5, 9}));
  CHECK(ints(Z, {1, 3, 0, 0}).frobenius_universal(2) ==
        ints(Z, {1, 3, 0, 0}).frobenius(2));

  std::mt19937_64 rng(614);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(Z, 12, rng), g = random_series(Z, 12, rng);
    CHECK(f.frobenius(2) == f.frobenius_universal(2));
    CHECK(f.frobenius(3) == f.frobenius_universal(3));
    CHECK(f.frobenius(2).frobenius(3) == f.frobenius(6));
    CHECK(f.frobenius(2).oplus(g.frobenius(2)) == f.oplus(g).frobenius(2));
    CHECK(f.star1(g).frobenius(2) == f.frobenius(2).star1(g.frobenius(2)));
    CHECK(f.verschiebung(2).frobenius(2) == truncated(f.oplus(f), 6));
    CHECK(f.verschiebung(2).verschiebung(3) == f.verschiebung(6));
  }
}

TEST_CASE("lambda operations on series") {
  auto Z = Ring::integers();
  auto P = Ring::polynomials(2, AdamsAction::VarPower);
  Elem x(P, Poly::variable(1)), y(P, Poly::variable(2));

  // rank-one inputs: lambda^2 of a single geometric factor vanishes
  CHECK(series_lambda(1, Series1::geometric(x, 8)) == Series1::geometric(x, 8));
  CHECK(series_lambda(2, Series1::geometric(x, 8)) == Series1::one(P, 4));
  CHECK(series_lambda(0, ints(Z, {5, 7, 1, 2})) == ints(Z, {1, 1, 1, 1}));

  // two factors: the pair alphabet is the single product xy
  auto f = Series1::geometric(x, 8).oplus(Series1::geometric(y, 8));
  CHECK(series_lambda(2, f) == Series1::geometric(x * y, 4));
  CHECK(series_lambda(3, f) == Series1::one(P, 2));
}

TEST_CASE("series model of Witt vectors") {
  auto Z = Ring::integers();
  auto e = exp_map(WittVec(
      Z, {Elem::one(Z), Elem::one(Z), Elem::zero(Z), Elem::zero(Z)}));
  CHECK(longs(e.tail()) == std::vector<long>({1, 2, 2, 3}));
  CHECK(longs(e.dlog()) == std::vector<long>({1, 3, 1, 3}));
  CHECK(exp_map(WittVec::teichmuller(Elem::integer(Z, 5), 6)) ==
        Series1::geometric(Elem::integer(Z, 5), 6));

  std::mt19937_64 rng(615);
  for (int trial = 0; trial < 12; ++trial) {
    WittVec a(Z, random_coords(Z, 8, rng)), b(Z, random_coords(Z, 8, rng));
    CHECK(exp_inverse(exp_map(a)) == a);
    CHECK(exp_map(a + b) == exp_map(a).oplus(exp_map(b)));
    CHECK(exp_map(a * b) == exp_map(a).star1(exp_map(b)));
    CHECK(exp_map(a.verschiebung(3)) == exp_map(a).verschiebung(3));
    CHECK(exp_map(a.frobenius(2)) == exp_map(a).frobenius(2));
    // ghost components are exactly the log-derivative coefficients
    auto gh = a.ghost();
    auto dl = exp_map(a).dlog();
    for (std::size_t i = 0; i < 8; ++i) CHECK(gh[i] == dl[i]);
  }

  auto g = random_series(Z, 9, rng);
  CHECK(exp_map(exp_inverse(g)) == g);
}

TEST_CASE("series model of necklace vectors") {
  auto Z = Ring::integers();
  auto two = NeckVec::m_vector(Elem::integer(Z, 2), 8);
  CHECK(sym_map(two) == Series1::geometric(Elem::integer(Z, 2), 8));
  CHECK(sym_map(NeckVec::one(Z, 5)) == ints(Z, {1, 1, 1, 1, 1}));

  std::vector<Elem> unit2(4, Elem::zero(Z));
  unit2[1] = Elem::one(Z);
  CHECK(sym_map(NeckVec(Z, unit2)) == ints(Z, {0, 1, 0, 1}));

  std::mt19937_64 rng(616);
  for (int trial = 0; trial < 12; ++trial) {
    NeckVec b(Z, random_coords(Z, 8, rng)), c(Z, random_coords(Z, 8, rng));
    CHECK(sym_inverse(sym_map(b)) == b);
    CHECK(sym_map(b + c) == sym_map(b).oplus(sym_map(c)));
    CHECK(sym_map(b * c) == sym_map(b).star1(sym_map(c)));
    // the triangle with the Witt model commutes
    WittVec a(Z, b.coords());
    CHECK(sym_map(necklace_from_witt(a)) == exp_map(a));
    auto gh = b.ghost();
    auto dl = sym_map(b).dlog();
    for (std::size_t i = 0; i < 8; ++i) CHECK(gh[i] == dl[i]);
  }

  auto g = random_series(Z, 9, rng);
  CHECK(sym_map(sym_inverse(g)) == g);
}

TEST_CASE("lambda operations transported to vectors") {
  auto Z = Ring::integers();
  auto P = Ring::polynomials(2, AdamsAction::VarPower);
  Elem x(P, Poly::variable(1)), y(P, Poly::variable(2));

  // on Witt coordinates (c1, c2) the second operation is just -c2
  WittVec generic(P, {x, y});
  auto lam = witt_lambda(2, generic);
  CHECK(lam.order() == 1);
  CHECK(lam.coord(1) == -y);
  CHECK(witt_lambda(1, generic) == generic);
  CHECK(witt_lambda(2, WittVec::teichmuller(x, 8)) == WittVec::zero(P, 4));

  // necklace side: lambda^2 of a sum of rank-one classes picks the product
  auto mx = NeckVec::m_vector(x, 8), my = NeckVec::m_vector(y, 8);
  CHECK(neck_lambda(2, mx + my) == NeckVec::m_vector(x * y, 4));
  CHECK(neck_lambda(2, mx) == NeckVec::zero(P, 4));

  // frozen scalar value: lambda^2(3, 1) = (2)
  NeckVec b(Z, {Elem::integer(Z, 3), Elem::integer(Z, 1)});
  CHECK(neck_lambda(2, b).coord(1) == Elem::integer(Z, 2));
}

TEST_CASE("deformed product") {
  auto Q = Ring::rationals();
  auto a2 = Series1::geometric(Elem::integer(Q, 2), 8);
  auto a3 = Series1::geometric(Elem::integer(Q, 3), 8);

  std::mt19937_64 rng(617);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(Q, 8, rng), g = random_series(Q, 8, rng);
    CHECK(star_q(f, g, 1) == f.star1(g));
    CHECK(star_q(f, g, 2) == star_q(g, f, 2));
    CHECK(star_q(f, star_q_identity(Q, 8, 3), 3) == f);
  }

  // squared geometrics multiply like rank-one classes at q = 2
  auto sq2 = a2.oplus(a2), sq3 = a3.oplus(a3);
  auto sq6 = Series1::geometric(Elem::integer(Q, 6), 8);
  CHECK(star_q(sq2, sq3, 2) == sq6.oplus(sq6));

  // the q = 2 identity is the square of the all-ones series
  auto ones = Series1::geometric(Elem::one(Q), 8);
  CHECK(star_q_identity(Q, 8, 2) == ones.oplus(ones));

  CHECK_THROWS_AS(star_q(a2, a3, 0), ConfigError);
  auto Z = Ring::integers();
  auto z2 = Series1::geometric(Elem::integer(Z, 2), 4);
  CHECK_THROWS_AS(star_q(z2, z2, 2), ConfigError);
  CHECK_THROWS_AS(star_q_identity(Z, 4, 2), ConfigError);
}
