#pragma once

#include <map>
#include <vector>

#include "hilbloc/partitions.hpp"
#include "hilbloc/rational.hpp"

namespace hilbloc {

using ChernMap = std::map<Partition, Rational, ReverseLex>;

/// A class in the rational complex cobordism ring, stored by its Chern
/// numbers: for complex dimension d, the value at lambda |- d is
/// c_lambda = int c_{lambda_1} ... c_{lambda_k}. Keys are always exactly the
/// partitions of d. Dimension 0 holds a multiple of the point class.
class ChernVector {
 public:
  explicit ChernVector(int dim);
  static ChernVector point(const Rational& multiple = 1);
  /// Throws Error if keys are not exactly the partitions of dim.
  ChernVector(int dim, ChernMap numbers);

  int dim() const { return dim_; }
  const ChernMap& numbers() const { return numbers_; }
  const Rational& at(const Partition& lambda) const;
  void set(const Partition& lambda, const Rational& value);
  bool is_zero() const;

  ChernVector& operator+=(const ChernVector& o);
  ChernVector& operator-=(const ChernVector& o);
  ChernVector& operator*=(const Rational& s);
  friend ChernVector operator+(ChernVector a, const ChernVector& b) { return a += b; }
  friend ChernVector operator-(ChernVector a, const ChernVector& b) { return a -= b; }
  friend ChernVector operator*(ChernVector a, const Rational& s) { return a *= s; }
  friend ChernVector operator*(const Rational& s, ChernVector a) { return a *= s; }
  friend bool operator==(const ChernVector& a, const ChernVector& b) {
    return a.dim_ == b.dim_ && a.numbers_ == b.numbers_;
  }

 private:
  int dim_;
  ChernMap numbers_;
};

/// Chern numbers of CP^n: c(T) = (1+h)^(n+1), so c_lambda = prod C(n+1, lambda_i).
ChernVector cp_class(int n);

/// Chern numbers of X x Y from those of X and Y, through the Whitney formula
/// c(X x Y) = c(X) c(Y).
ChernVector whitney_product(const ChernVector& x, const ChernVector& y);

/// Chern numbers of CP^{n_1} x ... x CP^{n_k}.
ChernVector cp_product_class(const std::vector<int>& dims);
inline ChernVector cp_product_class(const Partition& dims) { return cp_product_class(dims.parts()); }

/// Coefficients over the CP-monomial basis {CP^mu : mu |- d}.
using BasisCoefficients = std::map<Partition, Rational, ReverseLex>;

BasisCoefficients to_cp_basis(const ChernVector& x);
ChernVector from_cp_basis(int dim, const BasisCoefficients& coeffs);

/// Determinant of the Chern-number matrix of the CP-monomials of dimension d.
Rational cp_basis_determinant(int dim);

/// Ring product. Both factors go to the CP-monomial basis, monomials are
/// concatenated, and the result is mapped back to Chern numbers.
ChernVector multiply(const ChernVector& x, const ChernVector& y);

/// An element of (Omega (x) Q)[[z]] truncated at z^N whose n-th term has
/// complex dimension 2n, e.g. H(S) = sum [S^[n]] z^n.
class CobordismSeries {
 public:
  explicit CobordismSeries(int order);
  explicit CobordismSeries(std::vector<ChernVector> terms);

  int order() const { return static_cast<int>(terms_.size()) - 1; }
  const ChernVector& operator[](int n) const { return terms_.at(n); }
  ChernVector& operator[](int n) { return terms_.at(n); }
  const std::vector<ChernVector>& terms() const { return terms_; }
  CobordismSeries truncated(int order) const;

  friend CobordismSeries operator+(const CobordismSeries& a, const CobordismSeries& b);
  friend CobordismSeries operator*(const Rational& s, const CobordismSeries& a);
  friend CobordismSeries operator*(const CobordismSeries& a, const CobordismSeries& b);
  friend bool operator==(const CobordismSeries& a, const CobordismSeries& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<ChernVector> terms_;
};

/// log of a series whose term 0 is the unit point class.
CobordismSeries log_series(const CobordismSeries& h);
/// exp of a series with zero term 0.
CobordismSeries exp_series(const CobordismSeries& l);

/// H(S) for [S] = a [CP^2] + b [CP^1 x CP^1]:
/// exp(a log H(P2) + b log H(P1xP1)), truncated at z^N.
CobordismSeries hilb_series(const Rational& a, const Rational& b, int order, const CobordismSeries& h_p2,
                            const CobordismSeries& h_p1p1);

/// (a, b) with a [CP^2] + b [CP^1 x CP^1] having the given (c1^2, c2).
std::pair<Rational, Rational> surface_class_coordinates(const Rational& c1sq, const Rational& c2);

}  // namespace hilbloc
