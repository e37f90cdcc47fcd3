#pragma once

#include <vector>

#include "hilbloc/rational.hpp"

namespace hilbloc {

/// Dense univariate polynomial with exact rational coefficients. Used as the
/// coefficient ring for series that carry an auxiliary parameter (y, r, ...).
/// The representation is normalized: no trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);            // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int degree);
  static Poly variable() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of y^i; zero past the degree.
  Rational operator[](int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& y) const;
  /// p(y^m)
  Poly substitute_power(int m) const;
  /// p(-y)
  Poly negate_variable() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly& operator/=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, int e);

/// A generalized binomial C(p, k) with a polynomial argument.
Poly binomial(const Poly& p, int k);

inline bool is_unit(const Poly& p) { return p.is_constant() && !p.is_zero(); }
/// Inverse of a unit (a nonzero constant); throws Error otherwise.
Poly inverse_unit(const Poly& p);

}  // namespace hilbloc
