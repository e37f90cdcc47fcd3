#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbloc/cobordism.hpp"
#include "hilbloc/genera.hpp"
#include "hilbloc/localization.hpp"
#include "hilbloc/poly.hpp"
#include "hilbloc/series.hpp"

namespace hilbloc {

/// Polynomial in two variables with rational coefficients, keyed by the
/// exponent pair (i, j) of u^i v^j. Zero coefficients are never stored.
class BiPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  BiPoly() = default;
  explicit BiPoly(const Rational& c);
  static BiPoly u();
  static BiPoly v();

  const Terms& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  int total_degree() const;
  Rational eval(const Rational& u, const Rational& v) const;
  bool is_zero() const { return terms_.empty(); }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(int i, int j, const Rational& c);
  Terms terms_;
};

BiPoly pow(const BiPoly& p, int e);
/// "3*c1sq^2*c2 + 1/2*c2"; "0" for the zero polynomial.
std::string to_string(const BiPoly& p, const std::string& u = "c1sq", const std::string& v = "c2");

/// c_lambda(S^[n]) = P_lambda(c1^2(S), c2(S)) for every lambda |- 2n.
struct UniversalChernTable {
  int n = 0;
  std::map<Partition, BiPoly, ReverseLex> polys;

  /// Chern numbers of S^[n] for a surface with the given c1^2, c2.
  ChernVector evaluate(const Rational& c1sq, const Rational& c2) const;
};

/// Tables for n = 0..order from the two model series (each to order >= order):
/// term n of exp(a log H(P2) + b log H(P1xP1)) as a polynomial in (a, b),
/// rewritten in (c1^2, c2) through (c1^2, c2) = (9a + 8b, 3a + 4b).
std::vector<UniversalChernTable> universal_chern_polys(int order, const CobordismSeries& h_p2,
                                                       const CobordismSeries& h_p1p1);

/// A_r, B_r with sum chi(L_n (x) E^r) z^n
///   = g_{1,r^2-1}^chi(L) f_{0,r^2-1}^(chi(O)/2) A_r^(KL - K^2/2) B_r^(K^2).
struct TwistSeriesPair {
  int r = 0;
  Series log_a{"z", 0};
  Series log_b{"z", 0};
  Series a{"z", 0};
  Series b{"z", 0};
};

/// chi(L_n (x) E^r) on P2 for L = O(k), n = 0..order.
Series twist_data(int k, int r, int order, const IntegrationOptions& opts = {});

/// Fits log A_r, log B_r from the P2 data for the first two k values; every
/// further k must satisfy the fitted series exactly, else InternalInconsistency.
TwistSeriesPair fit_ab(int r, int order, const std::vector<int>& ks = {0, 1, 2}, const IntegrationOptions& opts = {});

/// Surface and line-bundle numbers entering the twisted Euler characteristic.
struct TwistInput {
  Rational chi_l;
  Rational kl;
  Rational k_squared;
  Rational chi_o;
};

/// Coefficient of z^n in the product formula, using the given A_r, B_r.
Rational chi_ln_er(const TwistInput& in, int n, const TwistSeriesPair& ab);
/// The whole product formula as a series in z.
Series chi_ln_er_series(const TwistInput& in, const TwistSeriesPair& ab);
/// K3: C(chi(L) - (r^2-1)(n-1), n).
Rational chi_ln_er_k3(const Rational& chi_l, int n, int r);
/// Abelian surface: (chi(L)/n) C(chi(L) - (r^2-1) n - 1, n-1), n >= 1.
Rational chi_ln_er_abelian(const Rational& chi_l, int n, int r);

/// chi(F^[n]) = chi(F) C(chi(O) + n - 2, n - 1), n >= 1.
Rational chi_taut_closed(const Rational& chi_f, const Rational& chi_o, int n);

/// sum_{n,i} h^i(F^[n]) z^i t^(n-1) = (sum_j h^j(F) z^j) (1+zt)^h1(O) / ((1-t)^h0(O) (1-z^2 t)^h2(O)),
/// as a series in t with polynomial coefficients in z; term m belongs to n = m + 1.
PolySeries cohomology_genfun(const std::array<int, 3>& h_f, const std::array<int, 3>& h_o, int order);

/// Multiplicative class applied to x^[n].
enum class PsiKind { TotalChern, TotalSegre, ExpDetFirstChern };

/// Coordinates (c1^2(x), c2(x), c1(x)c1(S), c1^2(S), c2(S)).
using Gamma = std::array<Rational, 5>;

struct ReferencePair {
  std::string surface;  ///< p2 | p1xp1
  std::vector<std::pair<int, int>> lines;  ///< (k, multiplicity) of O(k) on p2; unused on p1xp1
  int trivial_rank = 0;
  Gamma gamma;
};

/// The five fixed reference pairs for rank r, followed by the check pair
/// (P2, O(3) + (r-1)).
std::vector<ReferencePair> five_series_references(int r);

/// H_{Psi,Phi}(S, x) = sum_n int Psi(x^[n]) Phi(S^[n]) z^n by localization.
Series h_psi_phi(const ReferencePair& ref, PsiKind psi, const GenusSpec<Rational>& phi, int order,
                 const IntegrationOptions& opts = {});

struct FiveSeries {
  int r = 0;
  std::array<Series, 5> a{Series("z", 0), Series("z", 0), Series("z", 0), Series("z", 0), Series("z", 0)};  ///< log H = sum_i gamma_i a_i
  /// log H predicted at gamma.
  Series log_h(const Gamma& gamma) const;
};

/// Solves for A_1..A_5 order by order from the five reference pairs and checks
/// the sixth pair; throws InternalInconsistency on a singular system or failed check.
FiveSeries fit_five_series(PsiKind psi, const GenusSpec<Rational>& phi, int r, int order,
                           const IntegrationOptions& opts = {});

}  // namespace hilbloc
