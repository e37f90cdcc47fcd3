#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "hilbloc/cobordism.hpp"
#include "hilbloc/error.hpp"
#include "hilbloc/localization.hpp"

using namespace hilbloc;

namespace {

bool in_diagram(const Partition& lambda, int i, int j) {
  return i >= 0 && j >= 0 && i < lambda.length() && j < lambda[i];
}

// Weight decomposition of Hom(I, R/I) for the monomial ideal I spanned by the
// monomials x^i y^j outside lambda. A homogeneous map of shift d sends
// m to c_m m x^d1 y^d2; linearity links c_m with c_{xm}, c_{ym}. Each free
// component of that graph contributes the character -(d1 w1 + d2 w2).
std::map<std::pair<long, long>, int> hom_weights(const Partition& lambda, Vec2 w1, Vec2 w2) {
  const int box = lambda.size() + 2;
  std::map<std::pair<long, long>, int> out;
  for (int d1 = -box; d1 <= box; ++d1)
    for (int d2 = -box; d2 <= box; ++d2) {
      auto active = [&](int i, int j) {
        return i >= 0 && j >= 0 && !in_diagram(lambda, i, j) && in_diagram(lambda, i + d1, j + d2);
      };
      const int side = 2 * box + 1;
      std::vector<int> parent(side * side);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
      };
      std::vector<bool> zero(side * side, false);
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
          if (!active(i, j)) continue;
          if (active(i + 1, j)) parent[find((i + 1) * side + j)] = find(i * side + j);
          if (active(i, j + 1)) parent[find(i * side + j + 1)] = find(i * side + j);
        }
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
          if (!active(i, j)) continue;
          // predecessor in I whose image would need a negative exponent
          if (i > 0 && !in_diagram(lambda, i - 1, j) && i - 1 + d1 < 0) zero[find(i * side + j)] = true;
          if (j > 0 && !in_diagram(lambda, i, j - 1) && j - 1 + d2 < 0) zero[find(i * side + j)] = true;
        }
      int dim = 0;
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
          if (active(i, j) && find(i * side + j) == i * side + j && !zero[i * side + j]) ++dim;
      if (dim == 0) continue;
      const Vec2 c = -(d1 * w1 + d2 * w2);
      out[{c.x, c.y}] += dim;
    }
  return out;
}

std::map<std::pair<long, long>, int> as_map(const WeightMultiset& w) {
  std::map<std::pair<long, long>, int> out;
  for (const auto& [c, m] : w.entries) {
    out[{c.x, c.y}] += m;
    if (out[{c.x, c.y}] == 0) out.erase({c.x, c.y});
  }
  return out;
}

Vec2 total(const WeightMultiset& w) {
  Vec2 s;
  for (const auto& [c, m] : w.entries) s = s + m * c;
  return s;
}

HilbFixedPoint single_chart(const ToricSurface& s, int chart, const Partition& lambda) {
  HilbFixedPoint fp;
  fp.charts.assign(s.charts().size(), Partition{});
  fp.charts[chart] = lambda;
  return fp;
}

// coefficient of z^n in prod_k (1 - z^k)^(-e)
std::uint64_t colored_partitions(int e, int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int rep = 0; rep < e; ++rep)
    for (int k = 1; k <= n; ++k)
      for (int m = k; m <= n; ++m) c[m] += c[m - k];
  return c[n];
}

IntegrationOptions no_check() {
  IntegrationOptions o;
  o.cross_check = false;
  return o;
}

}  // namespace

TEST_CASE("fixed point counts") {
  const auto p2 = ToricSurface::p2();
  CHECK(enumerate_fixed_points(p2, 1).size() == 3);
  CHECK(enumerate_fixed_points(p2, 2).size() == 9);
  CHECK(enumerate_fixed_points(p2, 7).size() == 429);
  for (const auto& name : {"p1xp1", "blowup:p2:1"}) {
    const auto s = ToricSurface::parse(name);
    for (int n = 0; n <= 5; ++n) {
      const auto fps = enumerate_fixed_points(s, n);
      CHECK(fps.size() == colored_partitions(s.euler_number(), n));
      for (const auto& fp : fps) CHECK(fp.n() == n);
    }
  }
}

TEST_CASE("tangent weights of (x, y^2)") {
  const auto p2 = ToricSurface::p2();
  // chart 0 of p2 has weights (1,0), (0,1)
  REQUIRE(p2.charts()[0].w1 == Vec2{1, 0});
  REQUIRE(p2.charts()[0].w2 == Vec2{0, 1});
  const auto w = tangent_weights(p2, single_chart(p2, 0, Partition({2})));
  // x -> 1, x -> y, y^2 -> 1, y^2 -> y
  std::map<std::pair<long, long>, int> expected{{{1, 0}, 1}, {{1, -1}, 1}, {{0, 2}, 1}, {{0, 1}, 1}};
  CHECK(as_map(w) == expected);
}

TEST_CASE("tangent weights agree with Hom(I, R/I)") {
  for (const auto& name : {"p2", "p1xp1", "blowup:p2:2"}) {
    const auto s = ToricSurface::parse(name);
    for (int chart = 0; chart < s.euler_number(); ++chart)
      for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
          const auto& ch = s.charts()[chart];
          const auto w = tangent_weights(s, single_chart(s, chart, lambda));
          CHECK(w.rank() == 2 * n);
          CHECK(as_map(w) == hom_weights(lambda, ch.w1, ch.w2));
        }
  }
}

TEST_CASE("tautological weights") {
  const auto s = ToricSurface::parse("blowup:p2:0");
  const auto l = line_bundle(s, {1, 0, 2, -1});
  const auto o = trivial_bundle(s);
  for (int n = 1; n <= 3; ++n)
    for (const auto& fp : enumerate_fixed_points(s, n)) {
      const KClass x{{{l, 2}, {o, -1}}, 3};
      CHECK(taut_weights(s, fp, x).rank() == 4 * n);
      const auto wl = taut_weights(s, fp, KClass{{{l, 1}}, 0});
      const auto wo = taut_weights(s, fp, KClass{{}, 1});
      CHECK(wl.rank() == n);
      for (int r = -2; r <= 3; ++r) CHECK(det_taut_weight(s, fp, l, r) == total(wl) + (r - 1) * total(wo));
    }
  // O^[1] = O: one cell at the origin with the fibre weight of the bundle
  const auto p2 = ToricSurface::p2();
  const auto l2 = line_bundle(p2, {3, 0, 0});
  for (int c = 0; c < 3; ++c) {
    const auto w = taut_weights(p2, single_chart(p2, c, Partition({1})), KClass{{{l2, 1}}, 0});
    REQUIRE(w.entries.size() == 1);
    CHECK(w.entries[0].first == l2.local_weight(c));
  }
}

TEST_CASE("specialization ladders") {
  const auto p2 = ToricSurface::p2();
  for (int n = 1; n <= 4; ++n) {
    const auto a = choose_specialization(p2, n, Ladder::Primary);
    const auto b = choose_specialization(p2, n, Ladder::Secondary);
    CHECK(a.a == 1);
    CHECK(a.b >= 2);
    CHECK(b.a + b.b == 1);
    CHECK(b.a >= 3);
    CHECK_FALSE(a == b);
    for (const auto& fp : enumerate_fixed_points(p2, n))
      for (const auto& [c, m] : tangent_weights(p2, fp).entries) {
        CHECK(c.x * a.a + c.y * a.b != 0);
        CHECK(c.x * b.a + c.y * b.b != 0);
      }
  }
}

TEST_CASE("Euler numbers") {
  for (const auto& name : {"p2", "p1xp1", "blowup:p1xp1:3"}) {
    const auto s = ToricSurface::parse(name);
    for (int n = 1; n <= 4; ++n) {
      const auto c = chern_numbers_hilb(s, n);
      CHECK(c.at(Partition({2 * n})) == Rational(colored_partitions(s.euler_number(), n)));
    }
  }
  const auto p2 = ToricSurface::p2();
  CHECK(chern_numbers_hilb(p2, 2).at(Partition({4})) == 9);
  // S^[1] = S
  CHECK(chern_numbers_hilb(p2, 1).at(Partition({1, 1})) == 9);
  CHECK(chern_numbers_hilb(p2, 1).at(Partition({2})) == 3);
}

TEST_CASE("isomorphic surfaces and universality") {
  const auto p2 = ToricSurface::p2();
  const auto q = ToricSurface::p1xp1();
  for (int n = 1; n <= 3; ++n) {
    CHECK(chern_numbers_hilb(ToricSurface::parse("blowup:p2:0"), n) ==
          chern_numbers_hilb(ToricSurface::parse("blowup:p2:2"), n));
    // P1xP1 charts differ by the swap of factors
    CHECK(chern_numbers_hilb(q.blowup(0), n) == chern_numbers_hilb(q.blowup(3), n));
  }
  const auto h_p2 = hilb_series_localized(p2, 3);
  const auto h_q = hilb_series_localized(q, 3);
  const auto s = ToricSurface::parse("blowup:blowup:p2:0:3");
  const auto [a, b] = surface_class_coordinates(s.c1_squared(), s.c2());
  CHECK(hilb_series(a, b, 3, h_p2, h_q) == hilb_series_localized(s, 3));
}

TEST_CASE("holomorphic Euler characteristics") {
  const auto p2 = ToricSurface::p2();
  for (int n = 1; n <= 4; ++n) {
    CHECK(chi_line_bundle(p2, n, trivial_bundle(p2), 0) == 1);
    for (int k = 1; k <= 2; ++k) {
      const Rational chi = ratio((k + 1) * (k + 2), 2);
      CHECK(chi_line_bundle(p2, n, line_bundle(p2, {k, 0, 0}), 0) == binomial(chi + n - 1, n));
      // O(k)^[n] has chi(O(k)) sections and no higher cohomology
      CHECK(chi_tautological(p2, n, KClass{{{line_bundle(p2, {k, 0, 0}), 1}}, 0}) == chi);
    }
    CHECK(chi_tautological(p2, n, KClass{{}, 1}) == 1);
  }
}

TEST_CASE("parts below top degree cancel") {
  const auto s = ToricSurface::parse("blowup:p2:1");
  for (int n = 1; n <= 3; ++n)
    for (int deg = 0; deg < 2 * n; ++deg) {
      Integrand f;
      f.tangent_genus = todd_genus(2 * n);
      f.degree = deg;
      CHECK(integrate(s, n, f) == 0);
    }
}

TEST_CASE("threads and specializations do not change results") {
  const auto s = ToricSurface::parse("blowup:p2:0");
  IntegrationOptions one = no_check();
  one.threads = 1;
  IntegrationOptions three = no_check();
  three.threads = 3;
  IntegrationOptions other = no_check();
  other.specialization = OneParam{7, -3};
  for (int n = 1; n <= 3; ++n) {
    const auto base = chern_numbers_hilb(s, n, one);
    CHECK(base == chern_numbers_hilb(s, n, three));
    CHECK(base == chern_numbers_hilb(s, n, other));
  }
  const auto before = cross_checks_performed();
  chern_numbers_hilb(s, 2);
  CHECK(cross_checks_performed() > before);
}

TEST_CASE("bad specialization override") {
  const auto p2 = ToricSurface::p2();
  IntegrationOptions o;
  o.specialization = OneParam{1, 0};
  CHECK_THROWS_AS(chern_numbers_hilb(p2, 2, o), Error);
  o.specialization = OneParam{1, 1};
  CHECK_THROWS_AS(chern_numbers_hilb(p2, 2, o), Error);
}
