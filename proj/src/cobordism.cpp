#include "hilbloc/cobordism.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>

#include "hilbloc/error.hpp"

namespace hilbloc {

ChernVector::ChernVector(int dim) : dim_(dim) {
  if (dim < 0) throw Error("ChernVector dimension must be non-negative");
  for (const auto& p : enumerate_partitions(dim)) numbers_.emplace(p, Rational(0));
}

ChernVector::ChernVector(int dim, ChernMap numbers) : ChernVector(dim) {
  if (numbers.size() != numbers_.size()) throw Error("ChernVector keys must be exactly the partitions of the dimension");
  for (auto& [k, v] : numbers) set(k, v);
}

ChernVector ChernVector::point(const Rational& multiple) {
  ChernVector v(0);
  v.set(Partition(), multiple);
  return v;
}

const Rational& ChernVector::at(const Partition& lambda) const {
  auto it = numbers_.find(lambda);
  if (it == numbers_.end()) {
    throw Error("partition (" + lambda.key() + ") is not a partition of " + std::to_string(dim_));
  }
  return it->second;
}

void ChernVector::set(const Partition& lambda, const Rational& value) {
  auto it = numbers_.find(lambda);
  if (it == numbers_.end()) {
    throw Error("partition (" + lambda.key() + ") is not a partition of " + std::to_string(dim_));
  }
  it->second = value;
}

bool ChernVector::is_zero() const {
  for (const auto& [k, v] : numbers_)
    if (sgn(v) != 0) return false;
  return true;
}

ChernVector& ChernVector::operator+=(const ChernVector& o) {
  if (o.dim_ != dim_) throw Error("adding classes of different dimension");
  auto it = numbers_.begin();
  for (const auto& [k, v] : o.numbers_) (it++)->second += v;
  return *this;
}

ChernVector& ChernVector::operator-=(const ChernVector& o) {
  if (o.dim_ != dim_) throw Error("subtracting classes of different dimension");
  auto it = numbers_.begin();
  for (const auto& [k, v] : o.numbers_) (it++)->second -= v;
  return *this;
}

ChernVector& ChernVector::operator*=(const Rational& s) {
  for (auto& [k, v] : numbers_) v *= s;
  return *this;
}

ChernVector cp_class(int n) {
  if (n < 0) throw Error("cp_class: negative dimension");
  ChernVector v(n);
  for (const auto& [lambda, value] : v.numbers()) {
    Integer c = 1;
    for (int part : lambda.parts()) c *= Integer(binomial(Rational(n + 1), part));
    v.set(lambda, Rational(c));
  }
  return v;
}

namespace {

Partition sorted_nonzero(std::vector<int> v) {
  std::erase(v, 0);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

// Sums x_{a} y_{lambda - a} over all splits a of lambda's parts with |a| = dim x.
void whitney_rec(const std::vector<int>& parts, std::size_t idx, int remaining, std::vector<int>& a,
                 std::vector<int>& suffix_max, const ChernVector& x, const ChernVector& y, Rational& acc) {
  if (idx == parts.size()) {
    if (remaining != 0) return;
    std::vector<int> b(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) b[i] = parts[i] - a[i];
    const Rational& xv = x.at(sorted_nonzero(a));
    if (sgn(xv) == 0) return;
    acc += xv * y.at(sorted_nonzero(b));
    return;
  }
  if (remaining > suffix_max[idx]) return;
  for (int ai = 0; ai <= std::min(parts[idx], remaining); ++ai) {
    a[idx] = ai;
    whitney_rec(parts, idx + 1, remaining - ai, a, suffix_max, x, y, acc);
  }
}

}  // namespace

ChernVector whitney_product(const ChernVector& x, const ChernVector& y) {
  ChernVector out(x.dim() + y.dim());
  for (const auto& [lambda, unused] : out.numbers()) {
    const auto& parts = lambda.parts();
    std::vector<int> suffix(parts.size() + 1, 0);
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + parts[i];
    std::vector<int> a(parts.size(), 0);
    Rational acc = 0;
    whitney_rec(parts, 0, x.dim(), a, suffix, x, y, acc);
    out.set(lambda, acc);
  }
  return out;
}

namespace {

// Read-mostly memo tables shared across threads.
struct BasisData {
  std::vector<Partition> monomials;              // partitions of d, canonical order
  std::vector<std::vector<Rational>> inverse;    // (M^T)^{-1}, M[mu][lambda] = c_lambda(CP^mu)
  Rational determinant;
};

std::shared_mutex cache_mu;
std::map<Partition, std::shared_ptr<const ChernVector>> cp_cache;
std::map<int, std::shared_ptr<const BasisData>> basis_cache;

std::shared_ptr<const ChernVector> cached_cp(const Partition& mu) {
  {
    std::shared_lock lock(cache_mu);
    if (auto it = cp_cache.find(mu); it != cp_cache.end()) return it->second;
  }
  ChernVector v = ChernVector::point(1);
  for (int n : mu.parts()) v = whitney_product(v, cp_class(n));
  auto ptr = std::make_shared<const ChernVector>(std::move(v));
  std::unique_lock lock(cache_mu);
  return cp_cache.emplace(mu, ptr).first->second;
}

std::shared_ptr<const BasisData> basis_data(int d) {
  {
    std::shared_lock lock(cache_mu);
    if (auto it = basis_cache.find(d); it != basis_cache.end()) return it->second;
  }
  auto data = std::make_shared<BasisData>();
  data->monomials = enumerate_partitions(d);
  const std::size_t m = data->monomials.size();
  // A[lambda][mu] = c_lambda(CP^mu), so numbers = A * coeffs.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  for (std::size_t j = 0; j < m; ++j) {
    auto cp = cached_cp(data->monomials[j]);
    std::size_t i = 0;
    for (const auto& [lambda, value] : cp->numbers()) a[i++][j] = value;
  }
  // Gauss-Jordan on [A | I].
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  Rational det = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m) throw InternalInconsistency("CP-monomial Chern matrix is singular in dimension " + std::to_string(d));
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < m; ++j) {
        if (sgn(a[col][j]) != 0) a[r][j] -= f * a[col][j];
        if (sgn(inv[col][j]) != 0) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  data->inverse = std::move(inv);
  data->determinant = det;
  std::unique_lock lock(cache_mu);
  return basis_cache.emplace(d, std::move(data)).first->second;
}

}  // namespace

ChernVector cp_product_class(const std::vector<int>& dims) {
  if (dims.empty()) throw Error("cp_product_class: at least one factor required");
  std::vector<int> sorted = dims;
  for (int d : sorted)
    if (d <= 0) throw Error("cp_product_class: dimensions must be positive");
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return *cached_cp(Partition(std::move(sorted)));
}

Rational cp_basis_determinant(int dim) { return basis_data(dim)->determinant; }

BasisCoefficients to_cp_basis(const ChernVector& x) {
  auto data = basis_data(x.dim());
  std::vector<Rational> c;
  c.reserve(data->monomials.size());
  for (const auto& [lambda, value] : x.numbers()) c.push_back(value);
  BasisCoefficients out;
  for (std::size_t i = 0; i < data->monomials.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (sgn(c[j]) != 0) acc += data->inverse[i][j] * c[j];
    out.emplace(data->monomials[i], acc);
  }
  return out;
}

ChernVector from_cp_basis(int dim, const BasisCoefficients& coeffs) {
  ChernVector out(dim);
  for (const auto& [mu, a] : coeffs) {
    if (mu.size() != dim) throw Error("basis monomial (" + mu.key() + ") has the wrong dimension");
    if (sgn(a) == 0) continue;
    out += *cached_cp(mu) * a;
  }
  return out;
}

ChernVector multiply(const ChernVector& x, const ChernVector& y) {
  if (x.dim() == 0) return y * x.at(Partition());
  if (y.dim() == 0) return x * y.at(Partition());
  const auto bx = to_cp_basis(x);
  const auto by = to_cp_basis(y);
  BasisCoefficients prod;
  for (const auto& [mu, a] : bx) {
    if (sgn(a) == 0) continue;
    for (const auto& [nu, b] : by) {
      if (sgn(b) == 0) continue;
      prod[mu.merged_with(nu)] += a * b;
    }
  }
  return from_cp_basis(x.dim() + y.dim(), prod);
}

// ---- CobordismSeries ----

CobordismSeries::CobordismSeries(int order) {
  if (order < 0) throw Error("truncation order must be non-negative");
  for (int n = 0; n <= order; ++n) terms_.emplace_back(2 * n);
}

CobordismSeries::CobordismSeries(std::vector<ChernVector> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error("a cobordism series needs at least term 0");
  for (std::size_t n = 0; n < terms_.size(); ++n)
    if (terms_[n].dim() != static_cast<int>(2 * n)) throw Error("term n of a cobordism series must have dimension 2n");
}

CobordismSeries CobordismSeries::truncated(int order) const {
  if (order > this->order()) throw Error("cannot extend truncation order");
  return CobordismSeries(std::vector<ChernVector>(terms_.begin(), terms_.begin() + order + 1));
}

CobordismSeries operator+(const CobordismSeries& a, const CobordismSeries& b) {
  const int n = std::min(a.order(), b.order());
  CobordismSeries r(n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

CobordismSeries operator*(const Rational& s, const CobordismSeries& a) {
  CobordismSeries r = a;
  for (auto& t : r.terms_) t *= s;
  return r;
}

CobordismSeries operator*(const CobordismSeries& a, const CobordismSeries& b) {
  const int n = std::min(a.order(), b.order());
  CobordismSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += multiply(a[i], b[j]);
    }
  }
  return r;
}

CobordismSeries log_series(const CobordismSeries& h) {
  if (!(h[0] == ChernVector::point(1))) throw Error("log: term 0 must be the unit class");
  CobordismSeries f(h.order());
  for (int n = 1; n <= h.order(); ++n) {
    ChernVector acc = h[n] * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (f[k].is_zero() || h[n - k].is_zero()) continue;
      acc -= multiply(f[k], h[n - k]) * Rational(k);
    }
    f[n] = acc * ratio(1, n);
  }
  return f;
}

CobordismSeries exp_series(const CobordismSeries& l) {
  if (!l[0].is_zero()) throw Error("exp: term 0 must vanish");
  CobordismSeries g(l.order());
  g[0] = ChernVector::point(1);
  for (int n = 1; n <= l.order(); ++n) {
    ChernVector acc(2 * n);
    for (int k = 1; k <= n; ++k) {
      if (l[k].is_zero() || g[n - k].is_zero()) continue;
      acc += multiply(l[k], g[n - k]) * Rational(k);
    }
    g[n] = acc * ratio(1, n);
  }
  return g;
}

CobordismSeries hilb_series(const Rational& a, const Rational& b, int order, const CobordismSeries& h_p2,
                            const CobordismSeries& h_p1p1) {
  if (h_p2.order() < order || h_p1p1.order() < order) {
    throw Error("hilb_series: model data truncated below order " + std::to_string(order));
  }
  const auto l2 = log_series(h_p2.truncated(order));
  const auto l11 = log_series(h_p1p1.truncated(order));
  return exp_series(a * l2 + b * l11);
}

std::pair<Rational, Rational> surface_class_coordinates(const Rational& c1sq, const Rational& c2) {
  // [CP^2] = (9, 3), [CP^1 x CP^1] = (8, 4); determinant 12.
  return {Rational(4 * c1sq - 8 * c2) / 12, Rational(-3 * c1sq + 9 * c2) / 12};
}

}  // namespace hilbloc
