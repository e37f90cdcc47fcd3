#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hilbloc/error.hpp"
#include "hilbloc/poly.hpp"
#include "hilbloc/rational.hpp"

namespace hilbloc {

/// Formal power series c_0 + c_1 v + ... + c_N v^N truncated at order N, with
/// coefficients in R (Rational, or Poly when an auxiliary parameter is
/// carried). Binary operations require equal variable tags and produce the
/// minimum of the operand orders; nothing ever extends N.
template <class R>
class TruncSeries {
 public:
  TruncSeries(std::string var, int order) : var_(std::move(var)), c_(check_order(order) + 1, R(0)) {}
  TruncSeries(std::string var, int order, std::vector<R> coeffs) : TruncSeries(std::move(var), order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  static TruncSeries constant(std::string var, int order, const R& c) {
    TruncSeries s(std::move(var), order);
    s.c_[0] = c;
    return s;
  }
  /// The series "v" itself.
  static TruncSeries variable(std::string var, int order) {
    TruncSeries s(std::move(var), order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  const std::string& var() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_.at(i); }
  R& operator[](int i) { return c_.at(i); }
  const std::vector<R>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const {
    if (order > this->order()) throw Error("cannot extend truncation order");
    TruncSeries s(var_, order);
    std::copy_n(c_.begin(), order + 1, s.c_.begin());
    return s;
  }

  /// d/dv; the result has order N-1.
  TruncSeries derivative() const {
    if (order() == 0) throw Error("derivative of an order-0 series is undefined");
    TruncSeries d(var_, order() - 1);
    for (int i = 1; i <= order(); ++i) d.c_[i - 1] = R(c_[i] * Rational(i));
    return d;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    align(o);
    for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    align(o);
    for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncSeries& operator*=(const R& s) {
    for (auto& c : c_) c = R(c * s);
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& c : a.c_) c = R(-c);
    return a;
  }
  friend TruncSeries operator*(TruncSeries a, const R& s) { return a *= s; }
  friend TruncSeries operator*(const R& s, TruncSeries a) { return a *= s; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_var(b);
    const int n = std::min(a.order(), b.order());
    TruncSeries r(a.var_, n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i] == R(0)) continue;
      for (int j = 0; i + j <= n; ++j) r.c_[i + j] += R(a.c_[i] * b.c_[j]);
    }
    return r;
  }

  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw Error("truncation order must be non-negative");
    return order;
  }
  void require_same_var(const TruncSeries& o) const {
    if (var_ != o.var_) throw Error("series variable mismatch: '" + var_ + "' vs '" + o.var_ + "'");
  }
  void align(const TruncSeries& o) {
    require_same_var(o);
    if (o.order() < order()) c_.resize(o.order() + 1);
  }

  std::string var_;
  std::vector<R> c_;
};

using Series = TruncSeries<Rational>;
using PolySeries = TruncSeries<Poly>;

/// True iff a and b agree in every coefficient up to min(order) (and share a variable).
template <class R>
bool agree(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  if (a.var() != b.var()) return false;
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

/// a / b; b must have an invertible constant term ("non-unit divisor").
template <class R>
TruncSeries<R> divide(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  if (a.var() != b.var()) throw Error("series variable mismatch: '" + a.var() + "' vs '" + b.var() + "'");
  if (!is_unit(b[0])) throw Error("non-unit divisor");
  const int n = std::min(a.order(), b.order());
  const R inv0 = inverse_unit(b[0]);
  TruncSeries<R> q(a.var(), n);
  for (int i = 0; i <= n; ++i) {
    R acc = a[i];
    for (int j = 1; j <= i; ++j) acc -= R(b[j] * q[i - j]);
    q[i] = R(acc * inv0);
  }
  return q;
}

template <class R>
TruncSeries<R> inverse(const TruncSeries<R>& b) {
  return divide(TruncSeries<R>::constant(b.var(), b.order(), R(1)), b);
}

/// exp(f) for f with zero constant term, via n g_n = sum_k k f_k g_{n-k}.
template <class R>
TruncSeries<R> exp_series(const TruncSeries<R>& f) {
  if (!(f[0] == R(0))) throw Error("exp: constant term must be 0");
  TruncSeries<R> g(f.var(), f.order());
  g[0] = R(1);
  for (int n = 1; n <= f.order(); ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) {
      if (f[k] == R(0)) continue;
      acc += R(f[k] * g[n - k] * Rational(k));
    }
    g[n] = R(acc / Rational(n));
  }
  return g;
}

/// log(h) for h with constant term 1, via n f_n = n h_n - sum_{k<n} k f_k h_{n-k}.
template <class R>
TruncSeries<R> log_series(const TruncSeries<R>& h) {
  if (!(h[0] == R(1))) throw Error("log: constant term must be 1");
  TruncSeries<R> f(h.var(), h.order());
  for (int n = 1; n <= h.order(); ++n) {
    R acc = R(h[n] * Rational(n));
    for (int k = 1; k < n; ++k) {
      if (f[k] == R(0)) continue;
      acc -= R(f[k] * h[n - k] * Rational(k));
    }
    f[n] = R(acc / Rational(n));
  }
  return f;
}

/// h^e = exp(e log h) for h with constant term 1 and rational e.
template <class R>
TruncSeries<R> pow_series(const TruncSeries<R>& h, const Rational& e) {
  if (!(h[0] == R(1))) throw Error("pow: constant term must be 1");
  return exp_series(log_series(h) * R(e));
}

/// Coefficientwise map into another ring, e.g. evaluating a parameter.
template <class S, class R, class F>
TruncSeries<S> map_coeffs(const TruncSeries<R>& s, F&& fn) {
  TruncSeries<S> out(s.var(), s.order());
  for (int i = 0; i <= s.order(); ++i) out[i] = fn(s[i]);
  return out;
}

// ---- series specific to the Hilbert-scheme formulas ----

/// The unique v(z), v(0) = 0, with z = v (1+v)^a, by Lagrange inversion:
/// [z^n] v = C(-a n, n-1) / n.
Series solve_v(int a, int order);

/// Same series by the fixed-point iteration v <- z (1+v)^(-a). Kept as an
/// independent route; solve_v and this must agree.
Series solve_v_iterative(int a, int order);

enum class FGKind { F, G };

/// f_{y,a} = sum C(y - a(n-1), n) z^n and
/// g_{y,a} = sum y/(y - a n) C(y - a n, n) z^n, where the g coefficient is
/// taken in its cancelled polynomial form y (y-an-1)...(y-an-n+1)/n!.
/// The cancelled form is a polynomial in y, so y = a n needs no special case.
Series fg_series(FGKind kind, const Rational& y, int a, int order);
/// Same with y kept as a polynomial parameter.
PolySeries fg_series_param(FGKind kind, int a, int order);

struct PartitionFactor {
  int epsilon = 0;       ///< exponent shift: y^(k + epsilon)
  int multiplicity = 1;  ///< power m of the inverse factor
};

/// prod over factors of prod_{k>=1} (1 - y^(k+eps) z^k)^(-m), truncated at z^N.
/// Requires k + eps >= 0 for every k >= 1, i.e. eps >= -1.
PolySeries partition_product(const std::vector<PartitionFactor>& factors, int order);

}  // namespace hilbloc
