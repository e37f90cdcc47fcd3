#include "hilbloc/partitions.hpp"

#include <charconv>
#include <mutex>

#include "hilbloc/error.hpp"

namespace hilbloc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

Partition Partition::merged_with(const Partition& other) const {
  std::vector<int> m;
  m.reserve(parts_.size() + other.parts_.size());
  std::size_t i = 0, j = 0;
  while (i < parts_.size() || j < other.parts_.size()) {
    if (j == other.parts_.size() || (i < parts_.size() && parts_[i] >= other.parts_[j]))
      m.push_back(parts_[i++]);
    else
      m.push_back(other.parts_[j++]);
  }
  return Partition(std::move(m));
}

std::string Partition::key() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::from_key(std::string_view key) {
  std::vector<int> parts;
  if (key.empty()) return {};
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string_view::npos) comma = key.size();
    auto tok = key.substr(pos, comma - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw Error("malformed partition key '" + std::string(key) + "'");
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw Error("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

std::uint64_t count_with_parts(int n, int r) {
  if (n < 0 || r < 0) return 0;
  if (n == 0 && r == 0) return 1;
  if (n == 0 || r == 0 || r > n) return 0;
  // p(n, r) = p(n-1, r-1) + p(n-r, r), tabulated on demand.
  static std::mutex mu;
  static std::vector<std::vector<std::uint64_t>> table{{1}};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    std::vector<std::uint64_t> row(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
      std::uint64_t a = (k - 1 <= m - 1) ? table[m - 1][k - 1] : 0;
      std::uint64_t b = (k <= m - k) ? table[m - k][k] : 0;
      row[k] = a + b;
    }
    table.push_back(std::move(row));
  }
  return table[n][r];
}

std::uint64_t count_partitions(int n) {
  if (n < 0) return 0;
  std::uint64_t total = 0;
  for (int r = 0; r <= n; ++r) total += count_with_parts(n, r);
  return total;
}

std::vector<Cell> cells(const Partition& lambda) {
  std::vector<Cell> out;
  out.reserve(lambda.size());
  const auto& p = lambda.parts();
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int leg = 0;
      for (int k = i + 1; k < lambda.length() && p[k] > j; ++k) ++leg;
      out.push_back(Cell{i, j, p[i] - j - 1, leg});
    }
  }
  return out;
}

}  // namespace hilbloc
