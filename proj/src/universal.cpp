#include "hilbloc/universal.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "hilbloc/error.hpp"

namespace hilbloc {

// ---- BiPoly ----

BiPoly::BiPoly(const Rational& c) { add_term(0, 0, c); }

BiPoly BiPoly::u() {
  BiPoly p;
  p.add_term(1, 0, 1);
  return p;
}

BiPoly BiPoly::v() {
  BiPoly p;
  p.add_term(0, 1, 1);
  return p;
}

void BiPoly::add_term(int i, int j, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Rational BiPoly::eval(const Rational& u, const Rational& v) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e.first; ++k) t *= u;
    for (int k = 0; k < e.second; ++k) t *= v;
    total += t;
  }
  return total;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPoly pow(const BiPoly& p, int e) {
  if (e < 0) throw Error("BiPoly power must be non-negative");
  BiPoly r(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

std::string to_string(const BiPoly& p, const std::string& u, const std::string& v) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest total degree first
  std::vector<std::pair<std::pair<int, int>, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(to_string(mag));
    auto var = [&](const std::string& name, int k) {
      if (k == 1) factors.push_back(name);
      if (k > 1) factors.push_back(name + "^" + std::to_string(k));
    };
    var(u, e.first);
    var(v, e.second);
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

// ---- universal Chern polynomials ----

ChernVector UniversalChernTable::evaluate(const Rational& c1sq, const Rational& c2) const {
  ChernVector v(2 * n);
  for (const auto& [lambda, p] : polys) v.set(lambda, p.eval(c1sq, c2));
  return v;
}

std::vector<UniversalChernTable> universal_chern_polys(int order, const CobordismSeries& h_p2,
                                                       const CobordismSeries& h_p1p1) {
  if (h_p2.order() < order || h_p1p1.order() < order) throw Error("model series truncated below the requested order");
  const auto l1 = log_series(h_p2.truncated(order));
  const auto l2 = log_series(h_p1p1.truncated(order));

  // a = (4u - 8v)/12, b = (-3u + 9v)/12 with u = c1^2, v = c2.
  const BiPoly a = BiPoly::u() * ratio(1, 3) + BiPoly::v() * ratio(-2, 3);
  const BiPoly b = BiPoly::u() * ratio(-1, 4) + BiPoly::v() * ratio(3, 4);

  std::vector<UniversalChernTable> tables(order + 1);
  for (int n = 0; n <= order; ++n) {
    tables[n].n = n;
    for (const auto& lambda : enumerate_partitions(2 * n)) tables[n].polys[lambda] = BiPoly();
  }

  // exp(a l1 + b l2) = sum_{k,l} a^k b^l / (k! l!) l1^k l2^l; only k + l <= order contribute.
  CobordismSeries one(order);
  one[0] = ChernVector::point();
  std::vector<CobordismSeries> l1_pow{one};
  for (int k = 1; k <= order; ++k) l1_pow.push_back(l1_pow.back() * l1);
  for (int k = 0; k <= order; ++k) {
    CobordismSeries mixed = l1_pow[k];
    for (int l = 0; k + l <= order; ++l) {
      if (l > 0) mixed = mixed * l2;
      const BiPoly weight = pow(a, k) * pow(b, l) * (Rational(1) / Rational(factorial(k) * factorial(l)));
      for (int n = k + l; n <= order; ++n) {
        for (const auto& [lambda, c] : mixed[n].numbers()) {
          if (sgn(c) != 0) tables[n].polys[lambda] += weight * c;
        }
      }
    }
  }
  return tables;
}

// ---- twisted Euler characteristics ----

Series twist_data(int k, int r, int order, const IntegrationOptions& opts) {
  const auto p2 = ToricSurface::p2();
  const auto l = line_bundle(p2, {k, 0, 0});
  Series s("z", order);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) s[n] = chi_line_bundle(p2, n, l, r, opts);
  return s;
}

namespace {

Rational chi_o2k(int k) { return ratio((k + 1) * (k + 2), 2); }

/// log of the data with the g and f factors removed: (KL - K^2/2) log A + K^2 log B.
Series twist_residual(const Series& data, const Rational& chi_l, const Rational& chi_o, int r) {
  const int order = data.order();
  const int a = r * r - 1;
  const Series lg = log_series(fg_series(FGKind::G, 1, a, order));
  const Series lf = log_series(fg_series(FGKind::F, 0, a, order));
  return log_series(data) - lg * chi_l - lf * (chi_o / 2);
}

}  // namespace

TwistSeriesPair fit_ab(int r, int order, const std::vector<int>& ks, const IntegrationOptions& opts) {
  if (ks.size() < 2) throw Error("fit_ab needs at least two values of k");
  if (ks[0] == ks[1]) throw Error("fit_ab needs distinct values of k");
  std::vector<Series> residual;
  for (int k : ks) residual.push_back(twist_residual(twist_data(k, r, order, opts), chi_o2k(k), 1, r));

  // On P2 with L = O(k): KL - K^2/2 = -3k - 9/2, K^2 = 9.
  auto coeff_a = [](int k) { return ratio(-6 * k - 9, 2); };
  const Rational k_sq = 9;
  const Rational det = coeff_a(ks[0]) - coeff_a(ks[1]);
  TwistSeriesPair out;
  out.r = r;
  out.log_a = (residual[0] - residual[1]) * (Rational(1) / det);
  out.log_b = (residual[0] - out.log_a * coeff_a(ks[0])) * (Rational(1) / k_sq);
  for (std::size_t i = 2; i < ks.size(); ++i) {
    const Series predicted = out.log_a * coeff_a(ks[i]) + out.log_b * k_sq;
    if (!(predicted == residual[i]))
      throw InternalInconsistency("twist series fit fails the check at k=" + std::to_string(ks[i]) +
                                  ", r=" + std::to_string(r));
  }
  out.a = exp_series(out.log_a);
  out.b = exp_series(out.log_b);
  return out;
}

Series chi_ln_er_series(const TwistInput& in, const TwistSeriesPair& ab) {
  const int order = std::min(ab.log_a.order(), ab.log_b.order());
  const int a = ab.r * ab.r - 1;
  const Series lg = log_series(fg_series(FGKind::G, 1, a, order));
  const Series lf = log_series(fg_series(FGKind::F, 0, a, order));
  const Series log_total = lg * in.chi_l + lf * (in.chi_o / 2) + ab.log_a.truncated(order) * (in.kl - in.k_squared / 2) +
                           ab.log_b.truncated(order) * in.k_squared;
  return exp_series(log_total);
}

Rational chi_ln_er(const TwistInput& in, int n, const TwistSeriesPair& ab) {
  const Series s = chi_ln_er_series(in, ab);
  if (n < 0 || n > s.order()) throw Error("chi_ln_er: n outside the order of the twist series");
  return s[n];
}

Rational chi_ln_er_k3(const Rational& chi_l, int n, int r) {
  if (n < 0) throw Error("n must be non-negative");
  return binomial(chi_l - Rational((r * r - 1) * (n - 1)), n);
}

Rational chi_ln_er_abelian(const Rational& chi_l, int n, int r) {
  if (n < 1) throw Error("abelian closed form needs n >= 1");
  return chi_l / n * binomial(chi_l - Rational((r * r - 1) * n) - 1, n - 1);
}

Rational chi_taut_closed(const Rational& chi_f, const Rational& chi_o, int n) {
  if (n < 1) throw Error("chi_taut_closed needs n >= 1");
  return chi_f * binomial(chi_o + n - 2, n - 1);
}

PolySeries cohomology_genfun(const std::array<int, 3>& h_f, const std::array<int, 3>& h_o, int order) {
  for (int h : h_o)
    if (h < 0) throw Error("cohomology dimensions must be non-negative");
  for (int h : h_f)
    if (h < 0) throw Error("cohomology dimensions must be non-negative");
  PolySeries result = PolySeries::constant("t", order, Poly(std::vector<Rational>{h_f[0], h_f[1], h_f[2]}));
  // (1 + zt)^h1
  PolySeries num("t", order);
  for (int j = 0; j <= order; ++j) num[j] = Poly::monomial(binomial(Rational(h_o[1]), j), j);
  result *= num;
  // (1 - t)^(-h0) and (1 - z^2 t)^(-h2)
  PolySeries d0("t", order), d2("t", order);
  for (int j = 0; j <= order; ++j) {
    d0[j] = Poly(binomial(Rational(h_o[0] + j - 1), j));
    d2[j] = Poly::monomial(binomial(Rational(h_o[2] + j - 1), j), 2 * j);
  }
  return result * d0 * d2;
}

// ---- five universal series ----

std::vector<ReferencePair> five_series_references(int r) {
  auto g = [](int a, int b, int c, int d, int e) { return Gamma{a, b, c, d, e}; };
  return {
      {"p2", {}, r, g(0, 0, 0, 9, 3)},
      {"p2", {{1, 1}}, r - 1, g(1, 0, 3, 9, 3)},
      {"p2", {{2, 1}}, r - 1, g(4, 0, 6, 9, 3)},
      {"p2", {{1, 2}}, r - 2, g(4, 1, 6, 9, 3)},
      {"p1xp1", {}, r, g(0, 0, 0, 8, 4)},
      {"p2", {{3, 1}}, r - 1, g(9, 0, 9, 9, 3)},
  };
}

Series h_psi_phi(const ReferencePair& ref, PsiKind psi, const GenusSpec<Rational>& phi, int order,
                 const IntegrationOptions& opts) {
  const auto s = ToricSurface::parse(ref.surface);
  KClass x;
  for (const auto& [k, m] : ref.lines) {
    if (s.rays().size() != 3) throw Error("reference line bundles are given on p2 only");
    x.lines.emplace_back(line_bundle(s, {k, 0, 0}), m);
  }
  x.trivial_rank = ref.trivial_rank;

  Series h("z", order);
  h[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integrand f;
    const int b = f.add_bundle(TautologicalBundle{x});
    if (phi.degree() < 2 * n) throw Error("genus series truncated below 2n");
    f.tangent_genus = phi;
    switch (psi) {
      case PsiKind::TotalChern: f.classes.emplace_back(b, ClassKind::TotalChern); break;
      case PsiKind::TotalSegre: f.classes.emplace_back(b, ClassKind::TotalSegre); break;
      case PsiKind::ExpDetFirstChern: f.classes.emplace_back(b, ClassKind::ExpFirstChern); break;
    }
    h[n] = integrate(s, n, f, opts);
  }
  return h;
}

Series FiveSeries::log_h(const Gamma& gamma) const {
  Series total("z", a[0].order());
  for (int i = 0; i < 5; ++i) total += a[i] * gamma[i];
  return total;
}

namespace {

/// Solves m x = rhs exactly; nullopt if m is singular.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

FiveSeries fit_five_series(PsiKind psi, const GenusSpec<Rational>& phi, int r, int order,
                           const IntegrationOptions& opts) {
  const auto refs = five_series_references(r);
  std::vector<Series> logs;
  for (const auto& ref : refs) logs.push_back(log_series(h_psi_phi(ref, psi, phi, order, opts)));

  std::vector<std::vector<Rational>> m;
  for (int i = 0; i < 5; ++i) m.emplace_back(refs[i].gamma.begin(), refs[i].gamma.end());

  FiveSeries out;
  out.r = r;
  for (auto& s : out.a) s = Series("z", order);
  for (int k = 0; k <= order; ++k) {
    std::vector<Rational> rhs;
    for (int i = 0; i < 5; ++i) rhs.push_back(logs[i][k]);
    const auto x = solve_exact(m, rhs);
    if (!x) throw InternalInconsistency("reference classes are linearly dependent");
    for (int i = 0; i < 5; ++i) out.a[i][k] = (*x)[i];
  }
  if (!(out.log_h(refs[5].gamma) == logs[5]))
    throw InternalInconsistency("five-series fit fails the check pair at r=" + std::to_string(r));
  return out;
}

}  // namespace hilbloc
