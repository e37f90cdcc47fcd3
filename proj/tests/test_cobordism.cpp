#include <doctest.h>

#include <map>
#include <random>

#include "hilbloc/cobordism.hpp"
#include "hilbloc/error.hpp"
#include "hilbloc/localization.hpp"

using namespace hilbloc;

namespace {

// Truncated polynomial ring Q[h_1..h_k]/(h_i^(n_i+1)), monomials as exponent vectors.
using Mono = std::vector<int>;
using MPoly = std::map<Mono, Rational>;

MPoly mul(const MPoly& a, const MPoly& b, const std::vector<int>& dims) {
  MPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Mono e(dims.size());
      bool ok = true;
      for (std::size_t i = 0; i < dims.size(); ++i) {
        e[i] = ea[i] + eb[i];
        ok = ok && e[i] <= dims[i];
      }
      if (ok) r[e] += ca * cb;
    }
  return r;
}

// Chern numbers of prod CP^{n_i} by expanding prod (1+h_i)^(n_i+1) monomial by monomial.
ChernVector expanded_cp_product(const std::vector<int>& dims) {
  int d = 0;
  for (int n : dims) d += n;
  MPoly total{{Mono(dims.size(), 0), Rational(1)}};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    MPoly lin{{Mono(dims.size(), 0), Rational(1)}};
    Mono e(dims.size(), 0);
    e[i] = 1;
    lin[e] = 1;
    for (int k = 0; k <= dims[i]; ++k) total = mul(total, lin, dims);
  }
  std::vector<MPoly> graded(d + 1);
  for (const auto& [e, c] : total) {
    int deg = 0;
    for (int x : e) deg += x;
    graded[deg][e] += c;
  }
  ChernVector v(d);
  for (const auto& lambda : enumerate_partitions(d)) {
    MPoly prod{{Mono(dims.size(), 0), Rational(1)}};
    for (int part : lambda.parts()) prod = mul(prod, graded[part], dims);
    v.set(lambda, prod.count(dims) ? prod[dims] : Rational(0));
  }
  return v;
}

ChernVector random_class(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> num(-6, 6);
  ChernVector v(dim);
  for (const auto& lambda : enumerate_partitions(dim)) v.set(lambda, num(rng));
  return v;
}

}  // namespace

TEST_CASE("cp_product_class examples") {
  const auto p2 = cp_product_class(std::vector<int>{2});
  CHECK(p2.at(Partition({1, 1})) == 9);
  CHECK(p2.at(Partition({2})) == 3);
  const auto p11 = cp_product_class(std::vector<int>{1, 1});
  CHECK(p11.at(Partition({1, 1})) == 8);
  CHECK(p11.at(Partition({2})) == 4);
  CHECK(cp_product_class(std::vector<int>{1}).at(Partition({1})) == 2);
}

TEST_CASE("cp_product_class agrees with direct multivariate expansion") {
  const std::vector<std::vector<int>> cases = {{1}, {2}, {3}, {4}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 1, 1}, {2, 1, 1}, {3, 2}};
  for (const auto& dims : cases) CHECK(cp_product_class(dims) == expanded_cp_product(dims));
}

TEST_CASE("basis conversion") {
  const auto k3 = ChernVector(2, {{Partition({2}), 24}, {Partition({1, 1}), 0}});
  const auto coeffs = to_cp_basis(k3);
  CHECK(coeffs.at(Partition({2})) == -16);
  CHECK(coeffs.at(Partition({1, 1})) == 18);
  CHECK(from_cp_basis(2, coeffs) == k3);

  const auto p2 = cp_product_class(std::vector<int>{2});
  const auto c = to_cp_basis(p2);
  CHECK(c.at(Partition({2})) == 1);
  CHECK(c.at(Partition({1, 1})) == 0);

  // 3x3 determinant computed directly from the three product classes.
  const auto lambdas = enumerate_partitions(3);
  std::vector<std::vector<Rational>> m;
  for (const auto& mu : lambdas) {
    const auto v = cp_product_class(mu);
    std::vector<Rational> row;
    for (const auto& lambda : lambdas) row.push_back(v.at(lambda));
    m.push_back(row);
  }
  const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  CHECK(det != 0);
  CHECK(abs(cp_basis_determinant(3)) == abs(det));

  std::mt19937 rng(3);
  for (int d = 1; d <= 6; ++d) {
    const auto x = random_class(rng, d);
    CHECK(from_cp_basis(d, to_cp_basis(x)) == x);
  }
}

TEST_CASE("multiply") {
  std::mt19937 rng(5);
  const auto x = random_class(rng, 3);
  CHECK(multiply(ChernVector::point(), x) == x);
  CHECK(multiply(x, ChernVector::point(2)) == x * Rational(2));
  const auto p1 = cp_product_class(std::vector<int>{1});
  CHECK(multiply(p1, p1) == cp_product_class(std::vector<int>{1, 1}));
  for (int trial = 0; trial < 6; ++trial) {
    const int da = 1 + trial % 3, db = 1 + (trial + 1) % 3, dc = 1 + (trial + 2) % 2;
    const auto a = random_class(rng, da), b = random_class(rng, db), c = random_class(rng, dc);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a + a, b) == multiply(a, b) * Rational(2));
  }
  // Whitney products agree with multiplication on products of projective spaces.
  const auto p2 = cp_product_class(std::vector<int>{2});
  CHECK(whitney_product(p2, p1) == multiply(p2, p1));
  CHECK(whitney_product(p2, p2) == cp_product_class(std::vector<int>{2, 2}));
}

TEST_CASE("ChernVector validation") {
  CHECK_THROWS_AS(ChernVector(2, {{Partition({2}), 1}}), Error);
  ChernVector v(2);
  CHECK_THROWS_AS(v.set(Partition({3}), 1), Error);
  CHECK(v.is_zero());
  CHECK(ChernVector::point().at(Partition()) == 1);
}

TEST_CASE("Hilbert series of surface classes") {
  const int order = 4;
  const auto h1 = hilb_series_localized(ToricSurface::p2(), order);
  const auto h2 = hilb_series_localized(ToricSurface::p1xp1(), order);

  CHECK(hilb_series(1, 0, order, h1, h2) == h1);
  CHECK(hilb_series(0, 1, order, h1, h2) == h2);
  CHECK(exp_series(log_series(h1)) == h1);

  const auto k3 = hilb_series(-16, 18, order, h1, h2);
  CHECK(k3[2].at(Partition({4})) == 324);
  CHECK(k3[3].at(Partition({6})) == 3200);
  CHECK(k3[0] == ChernVector::point());

  const std::vector<std::pair<Rational, Rational>> classes = {{1, 0}, {ratio(1, 2), 3}, {-16, 18}, {2, -1}};
  for (const auto& [a, b] : classes) {
    const auto h = hilb_series(a, b, order, h1, h2);
    CHECK(h[1].at(Partition({1, 1})) == 9 * a + 8 * b);
    CHECK(h[1].at(Partition({2})) == 3 * a + 4 * b);
  }
  // Multiplicativity in the class.
  const auto ha = hilb_series(2, -1, order, h1, h2);
  const auto hb = hilb_series(ratio(1, 2), 3, order, h1, h2);
  CHECK(hilb_series(ratio(5, 2), 2, order, h1, h2) == ha * hb);

  // (8, 4) is also the class of the blown-up plane.
  const auto [a, b] = surface_class_coordinates(8, 4);
  CHECK(a == 0);
  CHECK(b == 1);
  const auto bl = hilb_series_localized(ToricSurface::parse("blowup:p2:0"), order);
  CHECK(hilb_series(a, b, order, h1, h2) == bl);

  CHECK_THROWS_AS(hilb_series(1, 1, order + 1, h1, h2), Error);
  const auto [ka, kb] = surface_class_coordinates(0, 24);
  CHECK(ka == -16);
  CHECK(kb == 18);
}
