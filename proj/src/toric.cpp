#include "hilbloc/toric.hpp"

#include <charconv>

#include "hilbloc/error.hpp"

namespace hilbloc {

ToricSurface::ToricSurface(std::vector<Vec2> rays, std::string name) : rays_(std::move(rays)), name_(std::move(name)) {
  const int e = static_cast<int>(rays_.size());
  if (e < 3) throw Error("a complete toric surface needs at least 3 rays");
  for (int i = 0; i < e; ++i) {
    const Vec2 a = rays_[i];
    const Vec2 b = rays_[(i + 1) % e];
    if (det(a, b) != 1) {
      throw Error("cone " + std::to_string(i) + " of '" + name_ + "' is not smooth and counter-clockwise");
    }
    // Dual basis of (a, b): rows of the inverse of [a b].
    charts_.push_back(Chart{i, (i + 1) % e, Vec2{b.y, -b.x}, Vec2{-a.y, a.x}});
  }
}

ToricSurface ToricSurface::p2() { return ToricSurface({{1, 0}, {0, 1}, {-1, -1}}, "p2"); }

ToricSurface ToricSurface::p1xp1() { return ToricSurface({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "p1xp1"); }

ToricSurface ToricSurface::from_rays(std::vector<Vec2> rays, std::string name) {
  return ToricSurface(std::move(rays), std::move(name));
}

ToricSurface ToricSurface::blowup(int chart) const {
  if (chart < 0 || chart >= static_cast<int>(charts_.size())) {
    throw Error("blowup: invalid chart index " + std::to_string(chart) + " for '" + name_ + "'");
  }
  std::vector<Vec2> rays = rays_;
  const Vec2 sum = rays_[charts_[chart].ray_a] + rays_[charts_[chart].ray_b];
  rays.insert(rays.begin() + chart + 1, sum);
  return ToricSurface(std::move(rays), "blowup:" + name_ + ":" + std::to_string(chart));
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::string_view context) {
  std::int64_t v = 0;
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
    throw Error("expected an integer in '" + std::string(context) + "', got '" + std::string(tok) + "'");
  }
  return v;
}

ToricSurface parse_tokens(const std::vector<std::string_view>& toks, std::size_t& pos, std::string_view whole) {
  if (pos >= toks.size()) throw Error("incomplete surface spec '" + std::string(whole) + "'");
  const auto tok = toks[pos++];
  if (tok == "p2") return ToricSurface::p2();
  if (tok == "p1xp1") return ToricSurface::p1xp1();
  if (tok == "blowup") {
    ToricSurface base = parse_tokens(toks, pos, whole);
    if (pos >= toks.size()) throw Error("blowup without chart index in '" + std::string(whole) + "'");
    return base.blowup(static_cast<int>(parse_int(toks[pos++], whole)));
  }
  throw Error("unknown surface '" + std::string(tok) + "' (expected p2, p1xp1 or blowup:...)");
}

}  // namespace

ToricSurface ToricSurface::parse(std::string_view spec) {
  const auto toks = split(spec, ':');
  std::size_t pos = 0;
  ToricSurface s = parse_tokens(toks, pos, spec);
  if (pos != toks.size()) throw Error("trailing tokens in surface spec '" + std::string(spec) + "'");
  return s;
}

std::int64_t ToricSurface::ray_intersection(int i, int j) const {
  const int e = euler_number();
  i = ((i % e) + e) % e;
  j = ((j % e) + e) % e;
  if (i == j) {
    // u_{i-1} + u_{i+1} = a_i u_i and D_i^2 = -a_i
    const Vec2 s = rays_[(i + e - 1) % e] + rays_[(i + 1) % e];
    const Vec2 u = rays_[i];
    const std::int64_t a = u.x != 0 ? s.x / u.x : s.y / u.y;
    return -a;
  }
  return ((j - i + e) % e == 1 || (i - j + e) % e == 1) ? 1 : 0;
}

std::int64_t ToricSurface::intersect(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e) const {
  const int n = euler_number();
  if (static_cast<int>(d.size()) != n || static_cast<int>(e.size()) != n) {
    throw Error("divisor must have one coefficient per ray");
  }
  std::int64_t acc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] != 0 && e[j] != 0) acc += d[i] * e[j] * ray_intersection(i, j);
  return acc;
}

std::vector<std::int64_t> ToricSurface::canonical_divisor() const { return std::vector<std::int64_t>(rays_.size(), -1); }

std::int64_t ToricSurface::c1_squared() const {
  const auto k = canonical_divisor();
  return intersect(k, k);
}

TLineBundle::TLineBundle(const ToricSurface& s, std::vector<std::int64_t> divisor) : divisor_(std::move(divisor)) {
  if (divisor_.size() != s.rays().size()) throw Error("divisor must have one coefficient per ray");
  for (const auto& c : s.charts()) local_weights_.push_back(divisor_[c.ray_a] * c.w1 + divisor_[c.ray_b] * c.w2);
}

TLineBundle parse_bundle(const ToricSurface& s, std::string_view text) {
  std::vector<std::int64_t> vals;
  for (auto tok : split(text, ',')) vals.push_back(parse_int(tok, text));
  const std::size_t e = s.rays().size();
  std::vector<std::int64_t> d(e, 0);
  if (vals.size() == e) {
    d = vals;
  } else if (s.name() == "p2" && vals.size() == 1) {
    d[0] = vals[0];
  } else if (s.name() == "p1xp1" && vals.size() == 2) {
    d[0] = vals[0];
    d[1] = vals[1];
  } else {
    throw Error("bundle '" + std::string(text) + "' needs " + std::to_string(e) + " ray coefficients for surface '" +
                s.name() + "'");
  }
  return TLineBundle(s, std::move(d));
}

bool is_affine_consistent(const ToricSurface& s, const TLineBundle& l) {
  const auto& charts = s.charts();
  const int e = static_cast<int>(charts.size());
  for (int i = 0; i < e; ++i) {
    const int next = (i + 1) % e;
    const Vec2 shared = s.rays()[charts[i].ray_b];
    if (dot(l.local_weight(i), shared) != dot(l.local_weight(next), shared)) return false;
    if (dot(l.local_weight(i), shared) != l.divisor()[charts[i].ray_b]) return false;
  }
  return true;
}

SurfaceInvariants invariants(const ToricSurface& s, const TLineBundle& l) {
  const auto k = s.canonical_divisor();
  SurfaceInvariants inv;
  inv.l_squared = Rational(s.intersect(l.divisor(), l.divisor()));
  inv.kl = Rational(s.intersect(k, l.divisor()));
  inv.k_squared = Rational(s.intersect(k, k));
  inv.euler = Rational(s.euler_number());
  inv.chi_o = (inv.k_squared + inv.euler) / 12;
  inv.chi_l = (inv.l_squared - inv.kl) / 2 + inv.chi_o;
  return inv;
}

}  // namespace hilbloc
