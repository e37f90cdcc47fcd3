#include "hilbloc/genera.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace hilbloc {

namespace {

Series exp_scaled(const Rational& s, int degree) {
  // e^{s x}
  Series e("x", degree);
  Rational term = 1;
  for (int m = 0; m <= degree; ++m) {
    e[m] = term;
    term = term * s / (m + 1);
  }
  return e;
}

Series todd_series(int degree) {
  // (1 - e^{-x}) / x = sum (-1)^m x^m / (m+1)!
  Series d("x", degree);
  for (int m = 0; m <= degree; ++m) d[m] = Rational(m % 2 ? -1 : 1) / Rational(factorial(m + 1));
  return inverse(d);
}

}  // namespace

GenusSpec<Rational> todd_genus(int degree) { return {"todd", todd_series(degree)}; }

GenusSpec<Rational> signature_genus(int degree) {
  Series cosh("x", degree), sinh_over_x("x", degree);
  for (int m = 0; 2 * m <= degree; ++m) {
    cosh[2 * m] = Rational(1) / Rational(factorial(2 * m));
    sinh_over_x[2 * m] = Rational(1) / Rational(factorial(2 * m + 1));
  }
  return {"signature", divide(cosh, sinh_over_x)};
}

GenusSpec<Rational> euler_genus(int degree) {
  Series q = Series::constant("x", degree, 1);
  if (degree >= 1) q[1] = 1;
  return {"euler", q};
}

GenusSpec<Rational> phi_genus(int level, int k, int degree) {
  if (level < 1 || k < 0 || k > level) {
    throw Error("phi_{N,k} requires integers 0 <= k <= N with N >= 1 (got N=" + std::to_string(level) +
                ", k=" + std::to_string(k) + ")");
  }
  return {"phi_" + std::to_string(level) + "_" + std::to_string(k),
          todd_series(degree) * exp_scaled(ratio(-k, level), degree)};
}

GenusSpec<Poly> chi_minus_y_genus(int degree) {
  // With s = x(1+y): Q = [s/(1-e^{-s})] (1 + y e^{-s}) / (1+y). The s^m
  // coefficient P_m(y) is linear in y, and s^m = x^m (1+y)^m, so the x^m
  // coefficient is P_m(y) (1+y)^{m-1} for m >= 1 and 1 for m = 0.
  const Series todd = todd_series(degree);
  const Poly y = Poly::variable();
  const Poly one_plus_y = Poly(1) + y;
  PolySeries q("x", degree);
  q[0] = Poly(1);
  for (int m = 1; m <= degree; ++m) {
    Rational mixed = 0;
    for (int j = 0; j <= m; ++j) mixed += todd[m - j] * Rational(j % 2 ? -1 : 1) / Rational(factorial(j));
    const Poly pm = Poly(todd[m]) + y * mixed;
    q[m] = (pm * pow(one_plus_y, m - 1)).negate_variable();
  }
  return {"chi_minus_y", q};
}

namespace {

template <class R>
using ChernPoly = std::map<Partition, R, ReverseLex>;

template <class R>
void add_product(ChernPoly<R>& out, const ChernPoly<R>& a, const ChernPoly<R>& b, const Rational& scale) {
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      R term = R(va * vb * scale);
      auto [it, inserted] = out.try_emplace(ka.merged_with(kb), term);
      if (!inserted) it->second += term;
    }
}

std::string coeff_key(const Rational& r) { return to_string(r); }
std::string coeff_key(const Poly& p) {
  std::string s = "[";
  for (const auto& c : p.coeffs()) s += to_string(c) + ",";
  return s + "]";
}

template <class R>
std::string cache_key(const GenusSpec<R>& q, int d) {
  std::string s = q.name + "|" + std::to_string(d) + "|";
  for (int i = 0; i <= std::min(d, q.series.order()); ++i) s += coeff_key(q.series[i]) + ";";
  return s;
}

template <class R>
std::map<Partition, R, ReverseLex> compute_sequence(const GenusSpec<R>& q, int d) {
  if (d > q.degree()) throw Error("genus series known only through degree " + std::to_string(q.degree()));
  const auto logq = log_series(q.series.truncated(d));
  // Newton: p_m = sum_{i=1}^{m-1} (-1)^{i-1} c_i p_{m-i} + (-1)^{m-1} m c_m
  std::vector<ChernPoly<R>> power(d + 1);
  for (int m = 1; m <= d; ++m) {
    auto& pm = power[m];
    for (int i = 1; i < m; ++i) {
      ChernPoly<R> ci{{Partition({i}), R(1)}};
      add_product(pm, ci, power[m - i], Rational(i % 2 ? 1 : -1));
    }
    R top = R(Rational(m % 2 ? m : -m));
    auto [it, inserted] = pm.try_emplace(Partition({m}), top);
    if (!inserted) it->second += top;
  }
  // graded exp of X = sum_m b_m p_m: m E_m = sum_j j X_j E_{m-j}
  std::vector<ChernPoly<R>> e(d + 1);
  e[0][Partition()] = R(1);
  for (int m = 1; m <= d; ++m) {
    for (int j = 1; j <= m; ++j) {
      if (logq[j] == R(0)) continue;
      ChernPoly<R> xj;
      for (const auto& [k, v] : power[j]) xj.emplace(k, R(v * logq[j]));
      add_product(e[m], xj, e[m - j], ratio(j, m));
    }
  }
  std::map<Partition, R, ReverseLex> out;
  for (const auto& lambda : enumerate_partitions(d)) {
    auto it = e[d].find(lambda);
    out.emplace(lambda, it == e[d].end() ? R(0) : it->second);
  }
  return out;
}

}  // namespace

template <class R>
std::map<Partition, R, ReverseLex> multiplicative_sequence(const GenusSpec<R>& q, int d) {
  using Table = std::map<Partition, R, ReverseLex>;
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Table>> memo;
  const std::string key = cache_key(q, d);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;
  }
  auto table = std::make_shared<const Table>(compute_sequence(q, d));
  std::lock_guard lock(mu);
  memo.emplace(key, table);
  return *table;
}

template <class R>
R genus_eval(const GenusSpec<R>& q, const ChernVector& x) {
  const auto k = multiplicative_sequence(q, x.dim());
  R acc(0);
  for (const auto& [lambda, value] : x.numbers()) {
    if (sgn(value) == 0) continue;
    acc += R(k.at(lambda) * value);
  }
  return acc;
}

template <class R>
TruncSeries<R> genus_series(const GenusSpec<R>& q, const CobordismSeries& h, const std::string& var) {
  TruncSeries<R> out(var, h.order());
  for (int n = 0; n <= h.order(); ++n) out[n] = genus_eval(q, h[n]);
  return out;
}

template std::map<Partition, Rational, ReverseLex> multiplicative_sequence(const GenusSpec<Rational>&, int);
template std::map<Partition, Poly, ReverseLex> multiplicative_sequence(const GenusSpec<Poly>&, int);
template Rational genus_eval(const GenusSpec<Rational>&, const ChernVector&);
template Poly genus_eval(const GenusSpec<Poly>&, const ChernVector&);
template Series genus_series(const GenusSpec<Rational>&, const CobordismSeries&, const std::string&);
template PolySeries genus_series(const GenusSpec<Poly>&, const CobordismSeries&, const std::string&);

// ---- Betti numbers and chi_y of the two models ----

namespace {

// Chart roles in the Betti sums: the first chart contributes p(n_1, r_1) with
// exponent shift -r_1, the last p(n_e, r_e) with +r_e, the rest p(n_i).
std::vector<int> chart_roles(ModelKind model) {
  return model == ModelKind::P2 ? std::vector<int>{-1, 0, 1} : std::vector<int>{-1, 0, 0, 1};
}

void betti_rec(const std::vector<int>& roles, std::size_t idx, int remaining, int shift, std::uint64_t weight,
               int n, std::vector<std::uint64_t>& b) {
  if (idx == roles.size()) {
    if (remaining == 0) b.at(n + shift) += weight;
    return;
  }
  for (int m = 0; m <= remaining; ++m) {
    if (roles[idx] == 0) {
      betti_rec(roles, idx + 1, remaining - m, shift, weight * count_partitions(m), n, b);
    } else {
      for (int r = 0; r <= m; ++r) {
        const std::uint64_t c = count_with_parts(m, r);
        if (c == 0) continue;
        betti_rec(roles, idx + 1, remaining - m, shift + roles[idx] * r, weight * c, n, b);
      }
    }
  }
}

}  // namespace

std::vector<std::uint64_t> betti_hilb_model(ModelKind model, int n) {
  if (n < 0) throw Error("betti_hilb_model: n must be non-negative");
  std::vector<std::uint64_t> b(2 * n + 1, 0);
  betti_rec(chart_roles(model), 0, n, 0, 1, n, b);
  return b;
}

PolySeries chi_y_hilb_product(ModelKind model, int order) {
  if (model == ModelKind::P2) return partition_product({{-1, 1}, {0, 1}, {1, 1}}, order);
  return partition_product({{-1, 1}, {0, 2}, {1, 1}}, order);
}

PolySeries chi_y_hilb_exp(const Poly& chi_minus_y_surface, int order) {
  PolySeries sum("z", order);
  const Poly y = Poly::variable();
  for (int m = 1; m <= order; ++m) {
    const Poly chi_m = chi_minus_y_surface.substitute_power(m) / Rational(m);
    // chi_m z^m sum_j (yz)^{mj}
    for (int j = 0; m * (j + 1) <= order; ++j) sum[m * (j + 1)] += chi_m * Poly::monomial(1, m * j);
  }
  return exp_series(sum);
}

PolySeries chi_y_hilb_betti(ModelKind model, int order) {
  PolySeries s("z", order);
  for (int n = 0; n <= order; ++n) {
    const auto b = betti_hilb_model(model, n);
    std::vector<Rational> c(b.begin(), b.end());
    s[n] = Poly(std::move(c));
  }
  return s;
}

Rational phi_nk(int level, int k, const ChernVector& x) { return genus_eval(phi_genus(level, k, x.dim()), x); }

Series phi_nk_closed_form(const Rational& phi_surface, int order) {
  Series one_minus_t = Series::constant("t", order, 1);
  if (order >= 1) one_minus_t[1] = -1;
  return pow_series(one_minus_t, -phi_surface);
}

}  // namespace hilbloc
