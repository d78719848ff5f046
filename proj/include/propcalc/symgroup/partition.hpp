#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace propcalc::symgroup {

/// Box (i,j) of a Young diagram: row i, column j, both 1-based.
struct Box {
  int i = 1;
  int j = 1;
  int diagonal() const { return j - i; }
  friend auto operator<=>(const Box&, const Box&) = default;
};

std::ostream& operator<<(std::ostream& os, const Box& b);

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "(2,1)", "2,1", "2 1", "()" or "∅".
  static Partition parse(const std::string& text);
  /// Rectangle with `rows` rows of length `cols`.
  static Partition rectangle(int rows, int cols);
  /// All partitions of n, starting from (n) in reverse lexicographic order.
  static std::vector<Partition> all(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// λ_i (1-based), 0 past the last row.
  int row(int i) const;
  bool contains(const Box& b) const { return b.i >= 1 && b.j >= 1 && row(b.i) >= b.j; }
  bool contains(const Partition& mu) const;
  std::vector<Box> boxes() const;

  std::vector<Box> removable() const;
  std::vector<Box> addable() const;
  Partition without(const Box& b) const;
  Partition with(const Box& b) const;

  Partition conjugate() const;
  /// Number of standard tableaux, via the hook length formula.
  long dimension() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

enum class BranchDir { remove, add };

/// Partitions differing from λ by one box, ordered by the box's row.
std::vector<std::pair<Partition, Box>> branch(const Partition& lambda, BranchDir dir);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace propcalc::symgroup
