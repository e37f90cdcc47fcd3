#include "hilbloc/series.hpp"

namespace hilbloc {

Series solve_v(int a, int order) {
  if (a < 0) throw Error("solve_v: a must be non-negative");
  Series v("z", order);
  for (int n = 1; n <= order; ++n) v[n] = binomial(Rational(-a * n), n - 1) / n;
  return v;
}

Series solve_v_iterative(int a, int order) {
  if (a < 0) throw Error("solve_v: a must be non-negative");
  const Series z = Series::variable("z", order);
  const Series one = Series::constant("z", order, 1);
  Series v("z", order);
  // Each pass fixes one more coefficient.
  for (int pass = 0; pass < order; ++pass) v = z * pow_series(one + v, Rational(-a));
  return v;
}

namespace {

template <class R>
R f_coefficient(const R& y, int a, int n) {
  return binomial(R(y - R(Rational(a * (n - 1)))), n);
}

template <class R>
R g_coefficient(const R& y, int a, int n) {
  if (n == 0) return R(1);
  // y/(y - an) * C(y - an, n) with the factor (y - an) cancelled.
  R acc = y;
  for (int i = 1; i < n; ++i) acc = R(acc * R(y - R(Rational(a * n + i))));
  return R(acc / Rational(factorial(n)));
}

}  // namespace

Series fg_series(FGKind kind, const Rational& y, int a, int order) {
  Series s("z", order);
  for (int n = 0; n <= order; ++n) s[n] = kind == FGKind::F ? f_coefficient(y, a, n) : g_coefficient(y, a, n);
  return s;
}

PolySeries fg_series_param(FGKind kind, int a, int order) {
  PolySeries s("z", order);
  const Poly y = Poly::variable();
  for (int n = 0; n <= order; ++n) s[n] = kind == FGKind::F ? f_coefficient(y, a, n) : g_coefficient(y, a, n);
  return s;
}

PolySeries partition_product(const std::vector<PartitionFactor>& factors, int order) {
  PolySeries result = PolySeries::constant("z", order, Poly(1));
  for (const auto& f : factors) {
    if (f.epsilon < -1) throw Error("partition_product: epsilon must be >= -1");
    for (int k = 1; k <= order; ++k) {
      // (1 - u)^(-m) = sum_j C(m+j-1, j) u^j with u = y^(k+eps) z^k
      PolySeries factor("z", order);
      for (int j = 0; j * k <= order; ++j) {
        factor[j * k] = Poly::monomial(binomial(Rational(f.multiplicity + j - 1), j), (k + f.epsilon) * j);
      }
      result *= factor;
    }
  }
  return result;
}

}  // namespace hilbloc
