#pragma once

#include <string>
#include <vector>

#include "propcalc/symgroup/partition.hpp"
#include "propcalc/symgroup/perm.hpp"

namespace propcalc::symgroup {

/// Young tableau filled with 1..n; constructed tableaux are always standard.
class Tableau {
public:
  /// Rows top to bottom. Throws std::invalid_argument unless standard.
  explicit Tableau(std::vector<std::vector<int>> rows);

  /// Single row 1..n and single column 1..n.
  static Tableau row(int n);
  static Tableau column(int n);
  /// Parses rows in braces, "{1,2}{3}". Throws std::invalid_argument.
  static Tableau parse(const std::string& text);
  /// All standard tableaux of the given shape, in a fixed order.
  static std::vector<Tableau> standard(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  Box box_of(int entry) const;

  /// The tableau with its largest entry removed.
  Tableau without_max() const;

  /// Row and column stabilizers as explicit permutation lists.
  std::vector<Perm> row_group() const;
  std::vector<Perm> column_group() const;

  std::string to_string() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

private:
  Tableau(std::vector<std::vector<int>> rows, bool checked);
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

}  // namespace propcalc::symgroup
