#include <doctest.h>

#include "hilbloc/error.hpp"
#include "hilbloc/localization.hpp"
#include "hilbloc/toric.hpp"

using namespace hilbloc;

namespace {

// #{m in Z^2 : <m, u_i> >= -d_i}; equals chi(O(D)) for nef D on a toric surface.
long lattice_points(const ToricSurface& s, const std::vector<std::int64_t>& d) {
  long count = 0;
  for (int x = -40; x <= 40; ++x)
    for (int y = -40; y <= 40; ++y) {
      bool inside = true;
      for (std::size_t i = 0; i < s.rays().size() && inside; ++i)
        inside = dot(Vec2{x, y}, s.rays()[i]) >= -d[i];
      count += inside;
    }
  return count;
}

// D.D' by localization on S = S^[1]: int c1(L) c1(L').
Rational localized_intersection(const ToricSurface& s, const std::vector<std::int64_t>& d,
                                const std::vector<std::int64_t>& e) {
  Integrand f;
  const int a = f.add_bundle(TautologicalBundle{KClass{{{line_bundle(s, d), 1}}, 0}});
  const int b = f.add_bundle(TautologicalBundle{KClass{{{line_bundle(s, e), 1}}, 0}});
  f.polynomial.push_back(ChernTerm{1, {{a, 1}, {b, 1}}});
  return integrate(s, 1, f);
}

std::vector<ToricSurface> sample_surfaces() {
  std::vector<ToricSurface> out = {ToricSurface::p2(), ToricSurface::p1xp1()};
  for (int i = 0; i < 3; ++i) out.push_back(ToricSurface::p2().blowup(i));
  for (int i = 0; i < 4; ++i) out.push_back(ToricSurface::p1xp1().blowup(i).blowup((i + 1) % 5));
  out.push_back(ToricSurface::parse("blowup:blowup:blowup:p2:0:1:2"));
  return out;
}

}  // namespace

TEST_CASE("model invariants") {
  const auto p2 = ToricSurface::p2();
  CHECK(p2.euler_number() == 3);
  CHECK(p2.c1_squared() == 9);
  CHECK(p2.c2() == 3);
  const auto q = ToricSurface::p1xp1();
  CHECK(q.euler_number() == 4);
  CHECK(q.c1_squared() == 8);
  CHECK(q.c2() == 4);
  const auto bl = ToricSurface::parse("blowup:p2:0");
  CHECK(bl.euler_number() == 4);
  CHECK(bl.c1_squared() == 8);
  CHECK(bl.c2() == 4);
}

TEST_CASE("charts are unimodular and blowups shift (c1^2, c2) by (-1, +1)") {
  for (const auto& s : sample_surfaces()) {
    CHECK(s.charts().size() == s.rays().size());
    for (const auto& ch : s.charts()) {
      CHECK(det(ch.w1, ch.w2) == 1);
      CHECK(dot(ch.w1, s.rays()[ch.ray_a]) == 1);
      CHECK(dot(ch.w1, s.rays()[ch.ray_b]) == 0);
      CHECK(dot(ch.w2, s.rays()[ch.ray_b]) == 1);
    }
    CHECK((s.c1_squared() + s.c2()) == 12);  // chi(O) = 1
    for (int i = 0; i < s.euler_number(); ++i) {
      const auto b = s.blowup(i);
      CHECK(b.c1_squared() == s.c1_squared() - 1);
      CHECK(b.c2() == s.c2() + 1);
    }
  }
}

TEST_CASE("blowup replaces chart weights (u, v) by (u, v-u) and (u-v, v)") {
  const auto p2 = ToricSurface::p2();
  for (int i = 0; i < 3; ++i) {
    const auto& old = p2.charts()[i];
    const auto b = p2.blowup(i);
    const auto& c1 = b.charts()[i];
    const auto& c2 = b.charts()[i + 1];
    // The exceptional ray sits between the two new charts; the first keeps the
    // old first ray, the second the old second ray.
    CHECK(c1.w1 == old.w1 - old.w2);
    CHECK(c1.w2 == old.w2);
    CHECK(c2.w1 == old.w1);
    CHECK(c2.w2 == old.w2 - old.w1);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(ToricSurface::parse("p3"), Error);
  CHECK_THROWS_AS(ToricSurface::parse("blowup:p2:3"), Error);
  CHECK_THROWS_AS(ToricSurface::parse("blowup:p2"), Error);
  CHECK_THROWS_AS(ToricSurface::parse("blowup:p2:x"), Error);
  CHECK_THROWS_AS(ToricSurface::p2().blowup(-1), Error);
  CHECK_THROWS_AS(ToricSurface::from_rays({{1, 0}, {1, 2}, {-1, -1}}, "bad"), Error);
  CHECK_THROWS_AS(ToricSurface::from_rays({{1, 0}, {-1, -1}, {0, 1}}, "clockwise"), Error);
  CHECK(ToricSurface::parse("blowup:blowup:p2:0:1").euler_number() == 5);
}

TEST_CASE("line bundles") {
  for (const auto& s : sample_surfaces()) {
    const auto o = trivial_bundle(s);
    for (const auto& w : o.local_weights()) CHECK(w.is_zero());
    std::vector<std::int64_t> d(s.rays().size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<std::int64_t>(i * i) - 2;
    const auto l = line_bundle(s, d);
    CHECK(is_affine_consistent(s, l));
    for (std::size_t c = 0; c < s.charts().size(); ++c) {
      const auto& ch = s.charts()[c];
      CHECK(dot(l.local_weight(static_cast<int>(c)), s.rays()[ch.ray_a]) == d[ch.ray_a]);
      CHECK(dot(l.local_weight(static_cast<int>(c)), s.rays()[ch.ray_b]) == d[ch.ray_b]);
    }
  }
  const auto p2 = ToricSurface::p2();
  CHECK(parse_bundle(p2, "2").divisor() == std::vector<std::int64_t>{2, 0, 0});
  CHECK(parse_bundle(ToricSurface::p1xp1(), "1,3").divisor() == std::vector<std::int64_t>{1, 3, 0, 0});
  CHECK(parse_bundle(p2, "1,0,1").divisor() == std::vector<std::int64_t>{1, 0, 1});
  CHECK_THROWS_AS(parse_bundle(p2, "1,2"), Error);
  CHECK_THROWS_AS(parse_bundle(p2, "a"), Error);
}

TEST_CASE("intersection numbers and Riemann-Roch") {
  const auto p2 = ToricSurface::p2();
  for (int k = -3; k <= 6; ++k) {
    const auto inv = invariants(p2, line_bundle(p2, {k, 0, 0}));
    CHECK(inv.l_squared == k * k);
    CHECK(inv.kl == -3 * k);
    CHECK(inv.k_squared == 9);
    CHECK(inv.euler == 3);
    CHECK(inv.chi_o == 1);
    CHECK(inv.chi_l == ratio((k + 1) * (k + 2), 2));
    if (k >= 0) CHECK(inv.chi_l == lattice_points(p2, {k, 0, 0}));
    // L . H = k
    CHECK(p2.intersect({k, 0, 0}, {1, 0, 0}) == k);
  }
  const auto q = ToricSurface::p1xp1();
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const auto inv = invariants(q, line_bundle(q, {a, b, 0, 0}));
      CHECK(inv.l_squared == 2 * a * b);
      CHECK(inv.kl == -2 * a - 2 * b);
      CHECK(inv.k_squared == 8);
      CHECK(inv.chi_l == (a + 1) * (b + 1));
      CHECK(inv.chi_l == lattice_points(q, {a, b, 0, 0}));
    }
  const auto bl = ToricSurface::parse("blowup:p2:0");
  const auto canonical = bl.canonical_divisor();
  CHECK(bl.intersect(canonical, canonical) == 8);
}

TEST_CASE("intersection form agrees with localization on S") {
  for (const auto& s : sample_surfaces()) {
    const int e = s.euler_number();
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) {
        std::vector<std::int64_t> d(e, 0), f(e, 0);
        d[i] = 1;
        f[j] = 1;
        CHECK(Rational(s.ray_intersection(i, j)) == localized_intersection(s, d, f));
      }
    const auto k = s.canonical_divisor();
    CHECK(Rational(s.c1_squared()) == localized_intersection(s, k, k));
    for (int i = 0; i < e; ++i) {
      std::vector<std::int64_t> d(e, 0);
      d[i] = 1;
      const auto inv = invariants(s, line_bundle(s, d));
      CHECK(inv.chi_o == 1);
      CHECK(inv.chi_l == chi_line_bundle(s, 1, line_bundle(s, d), 0));
    }
  }
}
