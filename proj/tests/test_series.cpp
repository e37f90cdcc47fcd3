#include <doctest.h>

#include <map>
#include <random>

#include "hilbloc/error.hpp"
#include "hilbloc/partitions.hpp"
#include "hilbloc/series.hpp"

using namespace hilbloc;

namespace {

Series ser(std::vector<Rational> c, int order) { return Series("z", order, std::move(c)); }

Series random_unit(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Series s("z", order);
  s[0] = 1;
  for (int i = 1; i <= order; ++i) s[i] = ratio(num(rng), den(rng));
  return s;
}

}  // namespace

TEST_CASE("ring operations") {
  const int n = 8;
  const Series one_plus = ser({1, 1}, n), one_minus = ser({1, -1}, n);
  CHECK(one_plus * one_minus == ser({1, 0, -1}, n));
  const Series geo = inverse(one_minus);
  for (int i = 0; i <= n; ++i) CHECK(geo[i] == 1);
  Series p5 = Series::constant("z", n, 1), p3 = Series::constant("z", n, 1);
  for (int i = 0; i < 5; ++i) p5 *= one_plus;
  for (int i = 0; i < 3; ++i) p3 *= one_plus;
  CHECK(divide(p5, p3) == ser({1, 2, 1}, n));
  CHECK_THROWS_WITH_AS(inverse(ser({0, 1}, n)), "non-unit divisor", Error);
  CHECK((ser({1, 2}, 3) * ser({1, 1}, 5)).order() == 3);
  CHECK((ser({1, 2}, 3) + ser({1, 1}, 5)).order() == 3);
  CHECK_THROWS_AS(ser({1}, 3) + Series("t", 3), Error);
}

TEST_CASE("exp, log and rational powers") {
  const int n = 10;
  const Series l = log_series(inverse(ser({1, -1}, n)));
  CHECK(l[0] == 0);
  for (int i = 1; i <= n; ++i) CHECK(l[i] == ratio(1, i));
  const Series f = ser({1, 3, 1}, n);
  CHECK(exp_series(log_series(f)) == f);
  const Series root = pow_series(ser({1, 1}, n), ratio(1, 2));
  CHECK(root * root == ser({1, 1}, n));
  CHECK_THROWS_WITH_AS(log_series(ser({2, 1}, n)), "log: constant term must be 1", Error);
  CHECK_THROWS_WITH_AS(exp_series(ser({1, 1}, n)), "exp: constant term must be 0", Error);
  CHECK_THROWS_AS(pow_series(ser({0, 1}, n), Rational(2)), Error);
}

TEST_CASE("round trips on random units, N = 12") {
  std::mt19937 rng(7);
  const std::vector<Rational> exps = {2, -1, ratio(1, 3), ratio(-5, 2), ratio(7, 4)};
  for (int trial = 0; trial < 20; ++trial) {
    const Series f = random_unit(rng, 12);
    CHECK(exp_series(log_series(f)) == f);
    const Rational e = exps[trial % exps.size()];
    CHECK(pow_series(pow_series(f, e), 1 / e) == f);
    CHECK(divide(f, f) == Series::constant("z", 12, 1));
  }
}

TEST_CASE("integer powers agree with repeated products") {
  std::mt19937 rng(11);
  const Series f = random_unit(rng, 9);
  Series p = Series::constant("z", 9, 1);
  for (int k = 1; k <= 4; ++k) {
    p *= f;
    CHECK(pow_series(f, Rational(k)) == p);
  }
}

TEST_CASE("solve_v") {
  CHECK(solve_v(0, 6) == Series::variable("z", 6));
  CHECK(solve_v(1, 5) == ser({0, 1, -1, 2, -5, 14}, 5));
  const Series z = Series::variable("z", 25);
  const Series one = Series::constant("z", 25, 1);
  for (int a = 0; a <= 8; ++a) {
    const Series v = solve_v(a, 25);
    CHECK(v * pow_series(one + v, Rational(a)) == z);
    CHECK(v == solve_v_iterative(a, 25));
  }
  CHECK_THROWS_AS(solve_v(-1, 3), Error);
}

TEST_CASE("f and g series") {
  const int n = 12;
  // a = 0: f_{y,0} = (1+z)^y
  for (const Rational& y : {Rational(3), ratio(1, 2), Rational(-2)}) {
    const Series f = fg_series(FGKind::F, y, 0, n);
    for (int i = 0; i <= n; ++i) CHECK(f[i] == binomial(y, i));
    CHECK(f == pow_series(ser({1, 1}, n), y));
  }
  const Series one = Series::constant("z", n, 1);
  for (int a = 0; a <= 8; ++a) {
    const Series g1 = fg_series(FGKind::G, 1, a, n);
    CHECK(g1 == one + solve_v(a, n));
    CHECK(fg_series(FGKind::G, ratio(7, 3), a, n) == pow_series(g1, ratio(7, 3)));
  }
  // direct formula where y - a n does not vanish
  const Rational y = ratio(5, 2);
  for (int a = 0; a <= 4; ++a) {
    const Series g = fg_series(FGKind::G, y, a, n);
    CHECK(g[0] == 1);
    for (int i = 1; i <= n; ++i) CHECK(g[i] == y / (y - a * i) * binomial(y - a * i, i));
  }
}

TEST_CASE("f/g identities to order 30") {
  const int n = 30;
  const Series one = Series::constant("z", n, 1);
  for (int a = 0; a <= 8; ++a) {
    const Series v = solve_v(a, n);
    const Series g1 = fg_series(FGKind::G, 1, a, n);
    const Series f0 = fg_series(FGKind::F, 0, a, n);
    CHECK(f0 == divide(pow_series(one + v, Rational(a + 1)), one + v * Rational(a + 1)));
    for (const Rational& y : {Rational(1), Rational(2), Rational(-1), ratio(5, 2)}) {
      const Series gy = fg_series(FGKind::G, y, a, n);
      CHECK(gy.derivative() == (fg_series(FGKind::F, y - 2 * a - 1, a, n) * y).truncated(n - 1));
      CHECK(gy == pow_series(g1, y));
      CHECK(fg_series(FGKind::F, y, a, n) == pow_series(g1, y) * f0);
    }
  }
}

TEST_CASE("polynomial parameter versions specialize correctly") {
  const int n = 8;
  for (int a = 0; a <= 3; ++a) {
    const auto fp = fg_series_param(FGKind::F, a, n);
    const auto gp = fg_series_param(FGKind::G, a, n);
    for (const Rational& y : {Rational(2), ratio(-3, 4)}) {
      const auto f = fg_series(FGKind::F, y, a, n);
      const auto g = fg_series(FGKind::G, y, a, n);
      for (int i = 0; i <= n; ++i) {
        CHECK(fp[i].eval(y) == f[i]);
        CHECK(gp[i].eval(y) == g[i]);
      }
    }
  }
}

TEST_CASE("partition_product single factor matches p(n, r) sums") {
  const int order = 15;
  for (int eps : {-1, 0, 1}) {
    const auto s = partition_product({{eps, 1}}, order);
    for (int n = 0; n <= order; ++n) {
      Poly expected;
      for (int r = 0; r <= n; ++r)
        expected += Poly::monomial(Rational(static_cast<long>(count_with_parts(n, r))), n + eps * r);
      CHECK(s[n] == expected);
    }
  }
  const auto plain = partition_product({{0, 1}}, 6);
  for (int n = 0; n <= 6; ++n) CHECK(plain[n] == Poly::monomial(Rational(static_cast<long>(count_partitions(n))), n));
}

TEST_CASE("partition_product at y = 1 counts coloured partitions") {
  // prod_k (1 - z^k)^(-m): sum over partitions of prod_i C(m + mult_i - 1, mult_i).
  const int order = 6;
  for (int m = 1; m <= 3; ++m) {
    const auto s = partition_product({{0, m}}, order);
    for (int n = 0; n <= order; ++n) {
      Rational expected = 0;
      for (const auto& p : enumerate_partitions(n)) {
        std::map<int, int> mult;
        for (int part : p.parts()) ++mult[part];
        Rational term = 1;
        for (const auto& [part, k] : mult) term *= binomial(Rational(m + k - 1), k);
        expected += term;
      }
      CHECK(s[n].eval(1) == expected);
    }
  }
  CHECK_THROWS_AS(partition_product({{-2, 1}}, 3), Error);
}
