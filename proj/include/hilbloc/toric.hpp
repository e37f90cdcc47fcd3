#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hilbloc/rational.hpp"

namespace hilbloc {

/// Lattice vector; used both for rays of a fan (in N) and for torus
/// characters (in M = dual of N).
struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(std::int64_t s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

inline std::int64_t dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline std::int64_t det(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Torus-fixed point of a smooth toric surface: the cone spanned by two
/// consecutive rays. w1, w2 are the tangent characters, i.e. the basis of M
/// dual to (ray_a, ray_b). Sign convention (the only place it is fixed): a
/// line bundle O(D) has fibre character l with <l, u_rho> = d_rho on the two
/// rays of the chart, and the monomial x^i y^j of the local coordinate ring
/// carries character -(i w1 + j w2).
struct Chart {
  int ray_a = 0;
  int ray_b = 0;
  Vec2 w1;
  Vec2 w2;
};

/// Smooth complete toric surface given by its rays in counter-clockwise order.
class ToricSurface {
 public:
  static ToricSurface p2();
  static ToricSurface p1xp1();
  /// Throws Error unless consecutive rays form unimodular, counter-clockwise cones.
  static ToricSurface from_rays(std::vector<Vec2> rays, std::string name);
  /// p2 | p1xp1 | blowup:<spec>:<chart index>
  static ToricSurface parse(std::string_view spec);

  /// Blow up the fixed point of the given chart (inserts the sum ray).
  ToricSurface blowup(int chart) const;

  const std::string& name() const { return name_; }
  const std::vector<Vec2>& rays() const { return rays_; }
  const std::vector<Chart>& charts() const { return charts_; }
  int euler_number() const { return static_cast<int>(rays_.size()); }

  /// D_rho . D_sigma
  std::int64_t ray_intersection(int i, int j) const;
  /// (sum d_i D_i) . (sum e_j D_j)
  std::int64_t intersect(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e) const;
  /// K = -sum D_rho
  std::vector<std::int64_t> canonical_divisor() const;
  std::int64_t c1_squared() const;
  std::int64_t c2() const { return euler_number(); }

 private:
  ToricSurface(std::vector<Vec2> rays, std::string name);
  std::vector<Vec2> rays_;
  std::vector<Chart> charts_;
  std::string name_;
};

/// Torus-equivariant line bundle O(sum d_rho D_rho) with its fibre characters
/// at the fixed points.
class TLineBundle {
 public:
  TLineBundle(const ToricSurface& s, std::vector<std::int64_t> divisor);

  const std::vector<std::int64_t>& divisor() const { return divisor_; }
  Vec2 local_weight(int chart) const { return local_weights_.at(chart); }
  const std::vector<Vec2>& local_weights() const { return local_weights_; }

 private:
  std::vector<std::int64_t> divisor_;
  std::vector<Vec2> local_weights_;
};

inline TLineBundle line_bundle(const ToricSurface& s, std::vector<std::int64_t> divisor) {
  return TLineBundle(s, std::move(divisor));
}
inline TLineBundle trivial_bundle(const ToricSurface& s) {
  return TLineBundle(s, std::vector<std::int64_t>(s.rays().size(), 0));
}

/// "k" on p2 (k H), "k1,k2" on p1xp1 (O(k1,k2)), or one coefficient per ray.
TLineBundle parse_bundle(const ToricSurface& s, std::string_view text);

/// True iff local weights of adjacent charts agree on the shared ray.
bool is_affine_consistent(const ToricSurface& s, const TLineBundle& l);

struct SurfaceInvariants {
  Rational l_squared;
  Rational kl;
  Rational k_squared;
  Rational euler;
  Rational chi_o;
  Rational chi_l;
};

/// Intersection numbers from the fan; chi(O) = (K^2 + e)/12 and
/// chi(L) = L(L-K)/2 + chi(O).
SurfaceInvariants invariants(const ToricSurface& s, const TLineBundle& l);

}  // namespace hilbloc
