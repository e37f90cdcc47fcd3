#include "hilbloc/localization.hpp"

#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

#include "hilbloc/error.hpp"

namespace hilbloc {

int HilbFixedPoint::n() const {
  int total = 0;
  for (const auto& p : charts) total += p.size();
  return total;
}

int WeightMultiset::rank() const {
  int r = 0;
  for (const auto& [c, m] : entries) r += m;
  return r;
}

int KClass::rank() const {
  int r = trivial_rank;
  for (const auto& [l, m] : lines) r += m;
  return r;
}

namespace {

void fixed_rec(int charts, int idx, int remaining, std::vector<Partition>& cur, std::vector<HilbFixedPoint>& out) {
  if (idx == charts - 1) {
    for (const auto& p : enumerate_partitions(remaining)) {
      cur[idx] = p;
      out.push_back(HilbFixedPoint{cur});
    }
    return;
  }
  for (int m = remaining; m >= 0; --m) {
    for (const auto& p : enumerate_partitions(m)) {
      cur[idx] = p;
      fixed_rec(charts, idx + 1, remaining - m, cur, out);
    }
  }
}

}  // namespace

std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurface& s, int n) {
  if (n < 0) throw Error("enumerate_fixed_points: n must be non-negative");
  const int e = s.euler_number();
  std::vector<HilbFixedPoint> out;
  std::vector<Partition> cur(e);
  fixed_rec(e, 0, n, cur, out);
  return out;
}

WeightMultiset tangent_weights(const ToricSurface& s, const HilbFixedPoint& fp) {
  if (fp.charts.size() != s.charts().size()) throw Error("fixed point does not match the surface's charts");
  WeightMultiset w;
  for (std::size_t c = 0; c < fp.charts.size(); ++c) {
    const auto& ch = s.charts()[c];
    for (const auto& cell : cells(fp.charts[c])) {
      const Character u = (cell.leg + 1) * ch.w1 - cell.arm * ch.w2;
      const Character v = -cell.leg * ch.w1 + (cell.arm + 1) * ch.w2;
      if (u.is_zero() || v.is_zero()) throw Error("non-isolated fixed point");
      w.entries.emplace_back(u, 1);
      w.entries.emplace_back(v, 1);
    }
  }
  return w;
}

WeightMultiset taut_weights(const ToricSurface& s, const HilbFixedPoint& fp, const KClass& x) {
  if (fp.charts.size() != s.charts().size()) throw Error("fixed point does not match the surface's charts");
  WeightMultiset w;
  for (std::size_t c = 0; c < fp.charts.size(); ++c) {
    const auto& ch = s.charts()[c];
    for (const auto& cell : cells(fp.charts[c])) {
      const Character monomial = cell.row * ch.w1 + cell.col * ch.w2;
      for (const auto& [line, mult] : x.lines) {
        if (mult != 0) w.entries.emplace_back(line.local_weight(static_cast<int>(c)) - monomial, mult);
      }
      if (x.trivial_rank != 0) w.entries.emplace_back(-monomial, x.trivial_rank);
    }
  }
  return w;
}

Character det_taut_weight(const ToricSurface& s, const HilbFixedPoint& fp, const TLineBundle& l, int r) {
  Character total;
  for (std::size_t c = 0; c < fp.charts.size(); ++c) {
    const auto& ch = s.charts()[c];
    for (const auto& cell : cells(fp.charts[c])) {
      const Character monomial = cell.row * ch.w1 + cell.col * ch.w2;
      total = total + (l.local_weight(static_cast<int>(c)) - monomial) + static_cast<std::int64_t>(r - 1) * (-monomial);
    }
  }
  return total;
}

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> tangent_character_set(const ToricSurface& s, int n) {
  std::set<std::pair<std::int64_t, std::int64_t>> chars;
  for (const auto& fp : enumerate_fixed_points(s, n))
    for (const auto& [c, m] : tangent_weights(s, fp).entries) chars.emplace(c.x, c.y);
  return chars;
}

bool separates(const std::set<std::pair<std::int64_t, std::int64_t>>& chars, OneParam p) {
  for (const auto& [x, y] : chars)
    if (x * p.a + y * p.b == 0) return false;
  return true;
}

}  // namespace

OneParam choose_specialization(const ToricSurface& s, int n, Ladder ladder) {
  const auto chars = tangent_character_set(s, n);
  for (std::int64_t k = 2; k < 1'000'000; ++k) {
    OneParam p = ladder == Ladder::Primary ? OneParam{1, k} : OneParam{k + 1, -k};
    if (separates(chars, p)) return p;
  }
  throw InternalInconsistency("no separating one-parameter subgroup found");
}

namespace {
std::atomic<std::uint64_t> g_cross_checks{0};
}  // namespace

std::uint64_t cross_checks_performed() { return g_cross_checks.load(); }

Integrand Integrand::chern_monomial(const Partition& lambda) {
  Integrand f;
  const int t = f.add_bundle(TangentBundle{});
  ChernTerm term{Rational(1), {}};
  for (int part : lambda.parts()) term.factors.push_back({t, part});
  f.polynomial.push_back(std::move(term));
  return f;
}

unsigned worker_count() {
  if (const char* env = std::getenv("HILBLOC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Scalars = std::vector<std::pair<Rational, int>>;

Scalars specialize(const WeightMultiset& w, OneParam p) {
  Scalars out;
  out.reserve(w.entries.size());
  for (const auto& [c, m] : w.entries) out.emplace_back(Rational(c.x * p.a + c.y * p.b), m);
  return out;
}

/// c_0 .. c_D of the virtual bundle: prod (1 + w t)^m.
std::vector<Rational> chern_classes(const Scalars& w, int degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[0] = 1;
  for (const auto& [x, m] : w) {
    if (sgn(x) == 0 || m == 0) continue;
    for (int rep = 0; rep < std::abs(m); ++rep) {
      if (m > 0) {
        for (int k = degree; k >= 1; --k) c[k] += x * c[k - 1];
      } else {
        // divide by (1 + x t)
        for (int k = 1; k <= degree; ++k) c[k] -= x * c[k - 1];
      }
    }
  }
  return c;
}

/// p_0 .. p_D with p_j = sum m w^j (p_0 = rank).
std::vector<Rational> power_sums(const Scalars& w, int degree) {
  std::vector<Rational> p(degree + 1, Rational(0));
  for (const auto& [x, m] : w) {
    Rational xp = 1;
    for (int j = 0; j <= degree; ++j) {
      p[j] += m * xp;
      xp *= x;
    }
  }
  return p;
}

struct PreparedIntegrand {
  const Integrand* f;
  std::vector<Rational> log_genus;  // coefficients of log Q
  std::vector<bool> need_chern;
  std::vector<bool> need_power;
};

Scalars bundle_scalars(const ToricSurface& s, const HilbFixedPoint& fp, const BundleRule& rule,
                       const Scalars& tangent, OneParam p) {
  return std::visit(
      [&](const auto& b) -> Scalars {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, TangentBundle>) {
          return tangent;
        } else if constexpr (std::is_same_v<B, TautologicalBundle>) {
          return specialize(taut_weights(s, fp, b.x), p);
        } else {
          const Character c = det_taut_weight(s, fp, b.line, b.r);
          return {{Rational(c.x * p.a + c.y * p.b), 1}};
        }
      },
      rule);
}

Rational evaluate_point(const ToricSurface& s, const HilbFixedPoint& fp, const Scalars& tangent,
                        const Rational& euler, const PreparedIntegrand& prep, OneParam p, int degree) {
  const Integrand& f = *prep.f;
  std::vector<Scalars> scal(f.bundles.size());
  std::vector<std::vector<Rational>> chern(f.bundles.size()), power(f.bundles.size());
  for (std::size_t b = 0; b < f.bundles.size(); ++b) {
    if (!prep.need_chern[b] && !prep.need_power[b]) continue;
    scal[b] = bundle_scalars(s, fp, f.bundles[b], tangent, p);
    if (prep.need_chern[b]) chern[b] = chern_classes(scal[b], degree);
    if (prep.need_power[b]) power[b] = power_sums(scal[b], degree);
  }

  Series total("t", degree);
  if (f.polynomial.empty()) {
    total[0] = 1;
  } else {
    for (const auto& term : f.polynomial) {
      int deg = 0;
      Rational v = term.coeff;
      for (const auto& fac : term.factors) {
        deg += fac.degree;
        if (deg > degree) break;
        v *= chern[fac.bundle][fac.degree];
      }
      if (deg <= degree) total[deg] += v;
    }
  }

  if (f.tangent_genus) {
    Series arg("t", degree);
    const auto tp = power_sums(tangent, degree);
    for (int j = 1; j <= degree; ++j) arg[j] = prep.log_genus[j] * tp[j];
    total *= exp_series(arg);
  }

  for (const auto& [b, kind] : f.classes) {
    Series factor("t", degree);
    switch (kind) {
      case ClassKind::TotalChern:
        for (int k = 0; k <= degree; ++k) factor[k] = chern[b][k];
        break;
      case ClassKind::TotalSegre: {
        Series c("t", degree);
        for (int k = 0; k <= degree; ++k) c[k] = chern[b][k];
        factor = inverse(c);
        break;
      }
      case ClassKind::ChernCharacter:
        for (int k = 0; k <= degree; ++k) factor[k] = power[b][k] / Rational(factorial(k));
        break;
      case ClassKind::ExpFirstChern: {
        Rational term = 1;
        const Rational c1 = degree >= 1 ? power[b][1] : Rational(0);
        for (int k = 0; k <= degree; ++k) {
          factor[k] = term;
          term = term * c1 / (k + 1);
        }
        break;
      }
    }
    total *= factor;
  }
  const int target = f.degree < 0 ? degree : f.degree;
  return total[target] / euler;
}

std::vector<Rational> bott_sum(const ToricSurface& s, int n, std::span<const Integrand> integrands, OneParam p,
                               const std::vector<HilbFixedPoint>& points, const std::vector<WeightMultiset>& tangent,
                               unsigned threads) {
  const int degree = 2 * n;
  std::vector<PreparedIntegrand> prep;
  for (const auto& f : integrands) {
    if (f.degree > degree) throw Error("integrand degree exceeds the dimension 2n");
    PreparedIntegrand pi{&f, {}, std::vector<bool>(f.bundles.size(), false),
                         std::vector<bool>(f.bundles.size(), false)};
    for (const auto& term : f.polynomial)
      for (const auto& fac : term.factors) {
        if (fac.bundle < 0 || fac.bundle >= static_cast<int>(f.bundles.size())) throw Error("undeclared bundle");
        pi.need_chern[fac.bundle] = true;
      }
    for (const auto& [b, kind] : f.classes) {
      if (b < 0 || b >= static_cast<int>(f.bundles.size())) throw Error("undeclared bundle");
      if (kind == ClassKind::TotalChern || kind == ClassKind::TotalSegre)
        pi.need_chern[b] = true;
      else
        pi.need_power[b] = true;
    }
    if (f.tangent_genus) {
      if (f.tangent_genus->degree() < degree) throw Error("genus series truncated below the integrand degree");
      const auto lg = log_series(f.tangent_genus->series.truncated(degree));
      pi.log_genus = lg.coeffs();
    }
    prep.push_back(std::move(pi));
  }

  const std::size_t count = points.size();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::vector<Rational>> partial(workers, std::vector<Rational>(integrands.size(), Rational(0)));
  std::vector<std::exception_ptr> errors(workers);

  // Contiguous blocks, reduced in block order: exact sums make the result
  // independent of the split anyway.
  auto work = [&](unsigned w) {
    try {
      const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) {
        const Scalars tw = specialize(tangent[i], p);
        Rational euler = 1;
        for (const auto& [x, m] : tw) {
          if (sgn(x) == 0) throw InternalInconsistency("specialized tangent weight vanished");
          euler *= x;
        }
        for (std::size_t k = 0; k < prep.size(); ++k)
          partial[w][k] += evaluate_point(s, points[i], tw, euler, prep[k], p, degree);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Rational> result(integrands.size(), Rational(0));
  for (const auto& part : partial)
    for (std::size_t k = 0; k < result.size(); ++k) result[k] += part[k];
  return result;
}

}  // namespace

std::vector<Rational> integrate_all(const ToricSurface& s, int n, std::span<const Integrand> integrands,
                                    const IntegrationOptions& opts) {
  const auto points = enumerate_fixed_points(s, n);
  std::vector<WeightMultiset> tangent;
  tangent.reserve(points.size());
  for (const auto& fp : points) tangent.push_back(tangent_weights(s, fp));
  const unsigned threads = opts.threads ? opts.threads : worker_count();

  if (opts.specialization && !separates(tangent_character_set(s, n), *opts.specialization)) {
    throw Error("specialization (" + std::to_string(opts.specialization->a) + "," +
                std::to_string(opts.specialization->b) + ") annihilates a tangent character of Hilb^" +
                std::to_string(n) + "(" + s.name() + ")");
  }
  const OneParam first = opts.specialization ? *opts.specialization : choose_specialization(s, n, Ladder::Primary);
  auto result = bott_sum(s, n, integrands, first, points, tangent, threads);
  if (opts.cross_check) {
    OneParam second = choose_specialization(s, n, opts.specialization ? Ladder::Primary : Ladder::Secondary);
    if (second == first) second = choose_specialization(s, n, Ladder::Secondary);
    const auto check = bott_sum(s, n, integrands, second, points, tangent, threads);
    if (check != result) {
      throw InternalInconsistency("Bott sum depends on the one-parameter subgroup on " + s.name() +
                                  ", n=" + std::to_string(n));
    }
    g_cross_checks += integrands.size();
  }
  return result;
}

Rational integrate(const ToricSurface& s, int n, const Integrand& integrand, const IntegrationOptions& opts) {
  return integrate_all(s, n, std::span<const Integrand>(&integrand, 1), opts).front();
}

ChernVector chern_numbers_hilb(const ToricSurface& s, int n, const IntegrationOptions& opts) {
  if (n < 0) throw Error("chern_numbers_hilb: n must be non-negative");
  const auto lambdas = enumerate_partitions(2 * n);
  std::vector<Integrand> integrands;
  integrands.reserve(lambdas.size());
  for (const auto& l : lambdas) integrands.push_back(Integrand::chern_monomial(l));
  const auto values = integrate_all(s, n, integrands, opts);
  ChernVector v(2 * n);
  for (std::size_t i = 0; i < lambdas.size(); ++i) v.set(lambdas[i], values[i]);
  return v;
}

CobordismSeries hilb_series_localized(const ToricSurface& s, int order, const IntegrationOptions& opts) {
  std::vector<ChernVector> terms;
  for (int n = 0; n <= order; ++n) terms.push_back(chern_numbers_hilb(s, n, opts));
  return CobordismSeries(std::move(terms));
}

Rational chi_line_bundle(const ToricSurface& s, int n, const TLineBundle& l, int r, const IntegrationOptions& opts) {
  Integrand f;
  const int b = f.add_bundle(DeterminantLine{l, r});
  f.tangent_genus = todd_genus(2 * n);
  f.classes.emplace_back(b, ClassKind::ExpFirstChern);
  return integrate(s, n, f, opts);
}

Rational chi_tautological(const ToricSurface& s, int n, const KClass& x, const IntegrationOptions& opts) {
  Integrand f;
  const int b = f.add_bundle(TautologicalBundle{x});
  f.tangent_genus = todd_genus(2 * n);
  f.classes.emplace_back(b, ClassKind::ChernCharacter);
  return integrate(s, n, f, opts);
}

}  // namespace hilbloc
