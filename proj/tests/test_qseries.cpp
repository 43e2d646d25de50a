#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "wittkit/errors.hpp"
#include "wittkit/gradedlog.hpp"
#include "wittkit/numth.hpp"
#include "wittkit/qseries.hpp"
#include "wittkit/ring.hpp"

using namespace wittkit;

namespace {

QSeries random_series(std::mt19937_64& rng, unsigned n) {
  std::vector<Rat> tail;
  tail.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    Rat v(static_cast<long>(rng() % 19) - 9, static_cast<long>(1 + rng() % 3));
    v.canonicalize();
    tail.push_back(v);
  }
  return QSeries(std::move(tail));
}

LaurentSeries constant(const Rat& v) { return {0, 1L << 30, {v}}; }

GradedIndex gx(unsigned m, unsigned n) { return {{m, n}, 0}; }

}  // namespace

TEST_CASE("laurent windows and precision") {
  LaurentSeries a(-1, 5, {Rat(1), Rat(0), Rat(2)});
  CHECK(a.lo() == -1);
  CHECK(a.coeff(-1) == 1);
  CHECK(a.coeff(0) == 0);
  CHECK(a.coeff(1) == 2);
  CHECK(a.coeff(5) == 0);
  CHECK(a.coeff(-7) == 0);
  CHECK_THROWS_AS(a.coeff(6), TruncationError);

  LaurentSeries shifted(-2, 9, {Rat(0), Rat(0), Rat(3)});
  CHECK(shifted.lo() == 0);  // leading zeros are not support
  CHECK(shifted.coeff(0) == 3);

  // square of q^-1 + q: the unknown tail interferes from q^4 on
  LaurentSeries p(-1, 4, {Rat(1), Rat(0), Rat(1)});
  LaurentSeries sq = p * p;
  CHECK(sq.lo() == -2);
  CHECK(sq.hi() == 3);
  CHECK(sq.coeff(-2) == 1);
  CHECK(sq.coeff(0) == 2);
  CHECK(sq.coeff(2) == 1);
  CHECK_THROWS_AS(sq.coeff(4), TruncationError);

  CHECK(LaurentSeries::one(20) * p == p);
  CHECK((LaurentSeries::zero(3) + p) == p.truncated(3));
  CHECK(p.scaled(Rat(0)).is_zero());
  CHECK((p - p).is_zero());

  // telescoping against a full geometric block
  LaurentSeries geom(0, 5, std::vector<Rat>(6, Rat(1)));
  LaurentSeries step(0, 1L << 30, {Rat(1), Rat(-1)});
  CHECK(step * geom == LaurentSeries::one(5));

  CHECK_THROWS_AS(LaurentSeries(0, 1, {Rat(1), Rat(1), Rat(1)}), ConfigError);
}

TEST_CASE("faber polynomials and expansions") {
  std::mt19937_64 rng(631);
  std::vector<Rat> tail{Rat(1, 2), Rat(-3), Rat(5, 3)};
  for (unsigned i = 3; i < 30; ++i) {
    Rat v(static_cast<long>(rng() % 19) - 9, static_cast<long>(1 + rng() % 3));
    v.canonicalize();
    tail.push_back(v);
  }
  QSeries f(tail);

  CHECK(faber_polynomial(f, 1) == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(faber_polynomial(f, 2) ==
        std::vector<Rat>{-Rat(1, 2), Rat(0), Rat(1, 2)});
  CHECK(faber_polynomial(f, 3) ==
        std::vector<Rat>{Rat(3), -Rat(1, 2), Rat(0), Rat(1, 3)});

  LaurentSeries x1 = faber_series(f, 1);
  CHECK(x1.coeff(-1) == 1);
  for (unsigned n = 1; n <= 30; ++n) CHECK(x1.coeff(n) == f.coeff(n));

  LaurentSeries x2 = faber_series(f, 2);
  CHECK(x2.coeff(-2) == Rat(1, 2));
  CHECK(x2.coeff(1) == f.coeff(2));
  CHECK(x2.coeff(2) == f.coeff(3) + f.coeff(1) * f.coeff(1) / 2);

  // independent reconstruction: evaluate each polynomial at f by horner and
  // demand the principal spike plus a positive-order tail
  LaurentSeries base = f.laurent();
  for (unsigned m = 1; m <= 10; ++m) {
    std::vector<Rat> poly = faber_polynomial(f, m);
    LaurentSeries acc = constant(poly[m]);
    for (unsigned k = m; k-- > 0;) acc = acc * base + constant(poly[k]);
    CHECK(acc.coeff(-static_cast<long>(m)) == Rat(1, static_cast<long>(m)));
    for (long e = -static_cast<long>(m) + 1; e <= 0; ++e)
      CHECK(acc.coeff(e) == 0);
    LaurentSeries direct = faber_series(f, m);
    for (long e = -static_cast<long>(m); e <= 6; ++e)
      CHECK(acc.coeff(e) == direct.coeff(e));
  }

  HTable t(f);
  for (unsigned m = 1; m <= 30; ++m) CHECK(t.at(m, 1) == f.coeff(m));
  LaurentSeries x3 = faber_series(f, 3);
  for (unsigned n = 1; n <= 10; ++n) CHECK(t.at(3, n) == x3.coeff(n));

  CHECK_THROWS_AS(faber_polynomial(f, 0), ConfigError);
  CHECK_THROWS_AS(t.at(0, 1), TruncationError);
  CHECK_THROWS_AS(t.at(7, 5), TruncationError);
}

TEST_CASE("coefficient table matches the kernel logarithm") {
  std::mt19937_64 rng(632);
  QSeries f = random_series(rng, 12);
  HTable t(f);
  for (unsigned m = 1; m <= 12; ++m)
    for (unsigned n = 1; m * n <= 12; ++n) CHECK(t.at(m, n) == t.at(n, m));

  LogCheckReport rep = log_identity_check(f, 12);
  CHECK(rep.log_identity_ok);
  CHECK(rep.multiset_ok);

  CHECK(t.at(2, 1) == f.coeff(2));
  CHECK(t.at(2, 2) == f.coeff(3) + f.coeff(1) * f.coeff(1) / 2);

  std::vector<Rat> lin;
  for (long n = 1; n <= 9; ++n) lin.emplace_back(n);
  QSeries g(lin);
  HTable tg(g);
  CHECK(tg.at(2, 2) == Rat(7, 2));
  CHECK(tg.at(3, 1) == 3);
  CHECK(log_identity_check(g, 9).log_identity_ok);

  CHECK_THROWS_AS(log_identity_check(f, 1), ConfigError);
  CHECK_THROWS_AS(log_identity_check(f, 20), TruncationError);
}

TEST_CASE("two-variable product collapses to a difference") {
  // bare pole: every polynomial is t^m/m and the product telescopes exactly
  QSeries bare(std::vector<Rat>(11, Rat(0)));
  LaurentSeries x3 = faber_series(bare, 3);
  CHECK(x3.coeff(-3) == Rat(1, 3));
  for (long e = -2; e <= 8; ++e) CHECK(x3.coeff(e) == 0);
  CHECK(difference_product_check(bare, 5, 5).ok);

  std::mt19937_64 rng(633);
  for (int trial = 0; trial < 3; ++trial) {
    QSeries f = random_series(rng, 12);
    CHECK(difference_product_check(f, 4, 4).ok);
  }
  QSeries f = random_series(rng, 12);
  CHECK_THROWS_AS(difference_product_check(f, 0, 4), ConfigError);
  CHECK_THROWS_AS(difference_product_check(f, 8, 8), TruncationError);
}

TEST_CASE("duplication scan over the coefficient table") {
  std::mt19937_64 rng(634);
  QSeries f = random_series(rng, 12);
  HTable t(f);
  ReplicableReport rep = is_replicable(t);
  CHECK_FALSE(rep.replicable);
  auto [a, b, c, d] = rep.witness;
  CHECK(a * b == c * d);
  CHECK(std::gcd(a, b) == std::gcd(c, d));
  CHECK(t.at(a, b) != t.at(c, d));

  // too short to constrain anything beyond the forced symmetric cells
  QSeries tiny = random_series(rng, 3);
  CHECK(is_replicable(HTable(tiny)).replicable);

  CHECK(is_replicable(HTable(j_invariant(24))).replicable);
}

TEST_CASE("modular expansion oracle") {
  QSeries jj = j_invariant(18);
  CHECK(jj.coeff(1) == 196884);
  for (unsigned n = 2; n <= 18; ++n) CHECK(jj.coeff(n) > jj.coeff(n - 1));

  // cells forced by duplication collapse onto single tail coefficients
  HTable t(jj);
  CHECK(t.at(2, 3) == jj.coeff(6));
  CHECK(t.at(6, 1) == jj.coeff(6));
  CHECK(t.at(2, 2) == jj.coeff(4) + jj.coeff(1) / 2);
  CHECK(t.at(3, 3) == jj.coeff(9) + jj.coeff(1) / 3);
  CHECK(t.at(4, 2) == jj.coeff(8) + jj.coeff(2) / 2);

  CHECK_THROWS_AS(jj.coeff(0), TruncationError);
  CHECK_THROWS_AS(jj.coeff(19), TruncationError);
  CHECK_THROWS_AS(jj.truncated(19), TruncationError);
  CHECK_THROWS_AS(j_invariant(129), ConfigError);
  CHECK(j_invariant(0).order() == 0);
}

TEST_CASE("replicate extraction and the root-of-unity collapse") {
  // reduction of sum_b x^{bk} modulo the d-th cyclotomic polynomial must
  // come out as the plain rational d [d | k]
  auto cyclotomic = [](unsigned d) -> std::vector<long> {
    switch (d) {
      case 1: return {-1, 1};
      case 2: return {1, 1};
      case 3: return {1, 1, 1};
      case 4: return {1, 0, 1};
      case 5: return {1, 1, 1, 1, 1};
      default: return {1, -1, 1};  // d = 6
    }
  };
  auto filter = [&](unsigned d, unsigned k) -> Rat {
    std::vector<Rat> p(d == 1 ? 1 : (d - 1) * k + 1, Rat(0));
    for (unsigned b = 0; b < d; ++b) p[b * k] += 1;
    std::vector<long> phi = cyclotomic(d);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
      Rat c = p[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 1; i < std::min(p.size(), deg + 1); ++i)
      REQUIRE(p[i] == 0);
    return p[0];
  };
  for (unsigned d = 1; d <= 6; ++d) {
    for (unsigned k = 0; k <= 36; ++k)
      CHECK(filter(d, k) == (k % d == 0 ? Rat(d) : Rat(0)));
    // pole side: the averaged principal parts survive only at d = 1
    CHECK(filter(d, d - 1) == (d == 1 ? Rat(1) : Rat(0)));
  }

  // symbolic bookkeeping of the averaged transform: one indeterminate per
  // family coefficient, exponent arithmetic done both ways
  auto P = Ring::polynomials(240, AdamsAction::Identity);
  auto var = [&](unsigned a, unsigned k) {
    return Elem(P, Poly::variable((a - 1) * 40 + k));
  };
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned n = 1; n <= 6; ++n) {
      Elem lhs = Elem::zero(P);
      for (long dl : divisors(static_cast<long>(m))) {
        unsigned d = static_cast<unsigned>(dl), a = m / d;
        for (unsigned k = 1; k <= 36; ++k)
          if (a * k == d * n) lhs += var(a, k).scaled(filter(d, k) / m);
      }
      Elem rhs = Elem::zero(P);
      for (long al : divisors(static_cast<long>(std::gcd(m, n)))) {
        unsigned a = static_cast<unsigned>(al);
        rhs += var(a, m * n / (a * a)).scaled(Rat(1, static_cast<long>(a)));
      }
      CHECK(lhs == rhs);
    }

  std::mt19937_64 rng(635);
  QSeries f = random_series(rng, 8);
  HTable t(f);
  ReplicateFamily fam(f, 2);
  CHECK(fam.count() == 2);
  CHECK(fam.replicate(1) == f);
  CHECK(fam.replicate(2).order() == 2);
  CHECK(fam.replicate(2).coeff(1) == (t.at(2, 2) - f.coeff(4)) * 2);
  CHECK(fam.replicate(2).coeff(2) == (t.at(2, 4) - f.coeff(8)) * 2);
  CHECK_FALSE(fam.consistent());  // generic tails admit no coherent family
  auto [fm, fn] = fam.failure();
  unsigned g = std::gcd(fm, fn);
  CHECK(g <= 2);
  Rat got(0);
  for (long al : divisors(static_cast<long>(g))) {
    unsigned a = static_cast<unsigned>(al);
    got += fam.replicate(a).coeff(fm * fn / (a * a)) *
           Rat(1, static_cast<long>(a));
  }
  CHECK(got != t.at(fm, fn));

  CHECK_THROWS_AS(ReplicateFamily(f, 0), ConfigError);
  CHECK_THROWS_AS(ReplicateFamily(f, 3), TruncationError);
  CHECK_THROWS_AS(fam.replicate(3), ConfigError);
}

TEST_CASE("the modular family is completely replicable") {
  QSeries jj = j_invariant(128);
  ReplicateFamily fam(jj, 3);
  CHECK(fam.consistent());
  // every member of the family is the series itself
  CHECK(fam.replicate(2) == jj.truncated(32));
  CHECK(fam.replicate(3) == jj.truncated(14));

  FamilyReport rep = completely_replicable_check(jj.truncated(32), 2);
  CHECK(rep.substitution_ok);
  REQUIRE(rep.replicate_checks.size() == 2);
  CHECK(rep.replicate_checks[1].second.replicable);
  CHECK(rep.all_ok());

  std::mt19937_64 rng(636);
  FamilyReport bad = completely_replicable_check(random_series(rng, 9), 2);
  CHECK_FALSE(bad.substitution_ok);
  CHECK_FALSE(bad.all_ok());
}

TEST_CASE("dimension recursion for the two-variable modular family") {
  QSeries jj = j_invariant(16);
  auto Q = Ring::rationals();
  GradedSeries h(Q, 2, 8);
  for (unsigned i = 1; i < 8; ++i)
    for (unsigned j = 1; i + j <= 8; ++j)
      h.set(gx(i, j), Elem::rational(Q, jj.coeff(i + j - 1)));

  // component coefficients collapse onto products of the two degrees
  GradedSeries lie = lie_components(h);
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n)
      CHECK(lie.coeff(gx(m, n)).rat() == jj.coeff(m * n));

  // hyperbolic pairing, direction dual to the first coordinate
  BilinearForm form({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, {Rat(0), Rat(1)});
  RecursionTables tab = log_by_recursion(h, form);
  HTable t(jj);
  auto eta = [&](unsigned a, unsigned b) -> Rat {
    auto it = tab.directional.find(gx(a, b));
    return it == tab.directional.end() ? Rat(0) : it->second.rat();
  };
  // the directional table is exactly the polynomial coefficient table
  for (unsigned m = 1; m < 8; ++m)
    for (unsigned n = 1; m + n <= 8; ++n) CHECK(eta(m, n) == t.at(m, n));

  // closed recursion the component dimensions satisfy
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n) {
      Rat rhs = jj.coeff(m + n - 1);
      for (unsigned k = 1; k < m; ++k)
        for (unsigned l = 1; l < n; ++l) {
          Rat w(k, m);
          w.canonicalize();
          rhs += w * eta(k, l) * jj.coeff((m - k) + (n - l) - 1);
        }
      for (long dl : divisors(static_cast<long>(std::gcd(m, n)))) {
        if (dl == 1) continue;
        unsigned d = static_cast<unsigned>(dl);
        rhs -= Rat(1, static_cast<long>(d)) * jj.coeff(m * n / (d * d));
      }
      CHECK(lie.coeff(gx(m, n)).rat() == rhs);
    }
}
