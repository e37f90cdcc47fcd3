#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbloc/cobordism.hpp"
#include "hilbloc/series.hpp"

namespace hilbloc {

/// A genus given by its characteristic power series Q(x), Q(0) = 1, known
/// through degree D. The name keys the multiplicative-sequence memo table and
/// must identify the series.
template <class R>
struct GenusSpec {
  std::string name;
  TruncSeries<R> series;  ///< variable "x"
  int degree() const { return series.order(); }
};

GenusSpec<Rational> todd_genus(int degree);
/// Q = x / tanh x
GenusSpec<Rational> signature_genus(int degree);
/// Q = 1 + x: evaluates to the top Chern number.
GenusSpec<Rational> euler_genus(int degree);
/// Q = x e^{-(k/N) x} / (1 - e^{-x}); requires 0 <= k <= N, N >= 1.
GenusSpec<Rational> phi_genus(int level, int k, int degree);
/// Hirzebruch chi_y series x(1 + y e^{-x(1+y)})/(1 - e^{-x(1+y)}) with y -> -y,
/// so that on varieties it gives sum_p chi(Omega^p) (-y)^p.
GenusSpec<Poly> chi_minus_y_genus(int degree);

/// K_lambda with prod_i Q(x_i) = sum_lambda K_lambda c_lambda in degree d.
template <class R>
std::map<Partition, R, ReverseLex> multiplicative_sequence(const GenusSpec<R>& q, int d);

/// sum_lambda K_lambda c_lambda(x)
template <class R>
R genus_eval(const GenusSpec<R>& q, const ChernVector& x);

/// Genus applied termwise: sum_n phi(term n) v^n.
template <class R>
TruncSeries<R> genus_series(const GenusSpec<R>& q, const CobordismSeries& h, const std::string& var = "z");

enum class ModelKind { P2, P1xP1 };

/// Even Betti numbers b_0, b_2, ..., b_{4n} of the Hilbert scheme of the model,
/// from the partition sums with p(a, b) = partitions of a into b parts.
std::vector<std::uint64_t> betti_hilb_model(ModelKind model, int n);

/// chi_{-y}(H(model)) from the infinite product over partitions.
PolySeries chi_y_hilb_product(ModelKind model, int order);
/// chi_{-y}(H(S)) = exp(sum_m chi_{-y^m}(S)/(1-(yz)^m) z^m/m) from chi_{-y}(S).
PolySeries chi_y_hilb_exp(const Poly& chi_minus_y_surface, int order);
/// sum_{n,p} b_{2p}(model^[n]) y^p z^n
PolySeries chi_y_hilb_betti(ModelKind model, int order);

Rational phi_nk(int level, int k, const ChernVector& x);
/// (1 - t)^{-phi(S)}
Series phi_nk_closed_form(const Rational& phi_surface, int order);

}  // namespace hilbloc
