#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "hilbloc/cobordism.hpp"
#include "hilbloc/genera.hpp"
#include "hilbloc/partitions.hpp"
#include "hilbloc/toric.hpp"

namespace hilbloc {

/// Torus-fixed point of Hilb^n(S): one monomial ideal (partition) per chart.
struct HilbFixedPoint {
  std::vector<Partition> charts;
  int n() const;
};

using Character = Vec2;

/// Characters with multiplicities; negative multiplicity encodes a virtual summand.
struct WeightMultiset {
  std::vector<std::pair<Character, int>> entries;
  int rank() const;
};

/// All fixed points of Hilb^n, ordered by composition of n over the charts
/// and then by the reverse-lexicographic partition order in each chart.
std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurface& s, int n);

/// Tangent space at a fixed point: each cell s of the partition at a chart with
/// weights (w1, w2) contributes (l(s)+1) w1 - a(s) w2 and -l(s) w1 + (a(s)+1) w2.
/// Throws Error("non-isolated fixed point") on a zero character.
WeightMultiset tangent_weights(const ToricSurface& s, const HilbFixedPoint& fp);

/// x = sum m_i M_i + r0 O in K(S).
struct KClass {
  std::vector<std::pair<TLineBundle, int>> lines;
  int trivial_rank = 0;
  int rank() const;
};

/// Fibre of x^[n] at fp: cell (i, j) of the chart partition contributes
/// local_weight(M) - (i w1 + j w2) for each summand M.
WeightMultiset taut_weights(const ToricSurface& s, const HilbFixedPoint& fp, const KClass& x);

/// Character of L_n (x) E^r at fp, using det(L^[n]) = L_n (x) E and E = det(O^[n]).
Character det_taut_weight(const ToricSurface& s, const HilbFixedPoint& fp, const TLineBundle& l, int r);

/// One-parameter subgroup t -> (t^a, t^b); a character chi specializes to <chi, (a, b)>.
struct OneParam {
  std::int64_t a = 1;
  std::int64_t b = 0;
  friend bool operator==(OneParam, OneParam) = default;
};

/// Two fixed ladders: primary (1, k) for k = 2, 3, ...; secondary (k, 1-k) for k = 3, 4, ...
enum class Ladder { Primary, Secondary };

/// First ladder element under which no tangent character of Hilb^n(S) vanishes.
OneParam choose_specialization(const ToricSurface& s, int n, Ladder ladder);

// ---- integrands ----

struct TangentBundle {};
struct TautologicalBundle {
  KClass x;
};
/// The line bundle L_n (x) E^r.
struct DeterminantLine {
  TLineBundle line;
  int r = 0;
};
using BundleRule = std::variant<TangentBundle, TautologicalBundle, DeterminantLine>;

enum class ClassKind { TotalChern, TotalSegre, ChernCharacter, ExpFirstChern };

struct ChernFactor {
  int bundle = 0;
  int degree = 0;
};
struct ChernTerm {
  Rational coeff;
  std::vector<ChernFactor> factors;
};

/// (sum_terms coeff * prod c_deg(bundle)) * [prod_i Q(x_i) over tangent roots]
/// * prod Psi(bundle). Only the degree-2n part is integrated.
struct Integrand {
  std::vector<BundleRule> bundles;
  std::vector<ChernTerm> polynomial;  ///< empty means the constant 1
  std::optional<GenusSpec<Rational>> tangent_genus;
  std::vector<std::pair<int, ClassKind>> classes;
  /// Degree whose part is summed; -1 means 2n. A degree below 2n sums the
  /// fixed-point contributions of that part, which must cancel to 0.
  int degree = -1;

  int add_bundle(BundleRule rule) {
    bundles.push_back(std::move(rule));
    return static_cast<int>(bundles.size()) - 1;
  }
  /// c_lambda(T)
  static Integrand chern_monomial(const Partition& lambda);
};

struct IntegrationOptions {
  std::optional<OneParam> specialization;  ///< overrides the primary ladder; must separate the tangent characters
  bool cross_check = true;                 ///< recompute with a second specialization
  unsigned threads = 0;                    ///< 0: worker_count()
};

/// Number of Bott sums confirmed by a second specialization so far in this process.
std::uint64_t cross_checks_performed();

/// HILBLOC_THREADS if set, else hardware concurrency (at least 1).
unsigned worker_count();

/// Bott residue sum for several integrands over the same fixed points.
std::vector<Rational> integrate_all(const ToricSurface& s, int n, std::span<const Integrand> integrands,
                                    const IntegrationOptions& opts = {});
Rational integrate(const ToricSurface& s, int n, const Integrand& integrand, const IntegrationOptions& opts = {});

/// All Chern numbers of Hilb^n(S).
ChernVector chern_numbers_hilb(const ToricSurface& s, int n, const IntegrationOptions& opts = {});
/// H(S) = sum_{n <= N} [S^[n]] z^n
CobordismSeries hilb_series_localized(const ToricSurface& s, int order, const IntegrationOptions& opts = {});

/// chi(L_n (x) E^r) = int td(T) exp(c1(L_n (x) E^r)).
Rational chi_line_bundle(const ToricSurface& s, int n, const TLineBundle& l, int r,
                         const IntegrationOptions& opts = {});
/// chi(F^[n]) = int td(T) ch(F^[n]).
Rational chi_tautological(const ToricSurface& s, int n, const KClass& f, const IntegrationOptions& opts = {});

}  // namespace hilbloc
