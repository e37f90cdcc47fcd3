#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hilbloc {

/// Integer partition: weakly decreasing positive parts. Immutable value type;
/// ordering is lexicographic on the parts.
class Partition {
 public:
  Partition() = default;
  /// Throws Error unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }

  Partition conjugate() const;
  /// Multiset union of parts, e.g. (2,1) u (3,1) = (3,2,1,1).
  Partition merged_with(const Partition& other) const;

  /// Comma-joined parts ("3,1"); the empty partition is "".
  std::string key() const;
  static Partition from_key(std::string_view key);

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Map comparator producing the canonical reverse-lexicographic order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// Box (row, col) of a Young diagram, row-major, with its arm and leg.
struct Cell {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// p(n, r): partitions of n into exactly r positive parts; p(0, 0) = 1.
std::uint64_t count_with_parts(int n, int r);
/// p(n)
std::uint64_t count_partitions(int n);

std::vector<Cell> cells(const Partition& lambda);

}  // namespace hilbloc
