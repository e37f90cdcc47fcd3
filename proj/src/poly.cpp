#include "hilbloc/poly.hpp"

#include "hilbloc/error.hpp"

namespace hilbloc {

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw Error("negative exponent in polynomial monomial");
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Rational Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational Poly::eval(const Rational& y) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Poly Poly::substitute_power(int m) const {
  if (m < 0) throw Error("substitute_power needs a non-negative exponent");
  if (is_zero()) return {};
  if (m == 0) return Poly(eval(1));
  std::vector<Rational> v(static_cast<std::size_t>(degree()) * m + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * m] = coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::negate_variable() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly& Poly::operator/=(const Rational& s) {
  if (sgn(s) == 0) throw Error("polynomial division by zero");
  for (auto& c : coeffs_) c /= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw Error("negative power of a polynomial");
  Poly r(1), base = p;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

Poly binomial(const Poly& p, int k) {
  if (k < 0) return {};
  Poly r(1);
  for (int i = 0; i < k; ++i) {
    r *= (p - Poly(i));
    r /= Rational(i + 1);
  }
  return r;
}

Poly inverse_unit(const Poly& p) {
  if (!is_unit(p)) throw Error("non-unit divisor");
  return Poly(Rational(1) / p[0]);
}

}  // namespace hilbloc
