#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "propcalc/scalars/rat.hpp"

namespace propcalc::scalars {

/// Sparse row vector over Q: column -> nonzero value.
using SparseRow = std::map<std::size_t, Rat>;

/// Incremental exact Gaussian elimination over Q.
///
/// Rows are fed one at a time and reduced against the current echelon basis;
/// only independent rows are kept, so memory is bounded by the rank no matter
/// how many rows are streamed in. Pivot rows are kept fully reduced.
class RowReducer {
public:
  explicit RowReducer(std::size_t columns) : columns_(columns) {}

  /// Adds a row; returns true if it increased the rank.
  bool add_row(SparseRow row);
  bool add_row(const std::vector<Rat>& dense);

  /// True if the row lies in the span of the rows added so far.
  bool in_span(SparseRow row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

  /// Basis of {x : r.x = 0 for every added row r}, as dense vectors.
  std::vector<std::vector<Rat>> nullspace() const;

private:
  void reduce(SparseRow& row) const;

  std::size_t columns_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with 1 at pivot
};

/// Rank of a dense matrix given as rows.
std::size_t rank(const std::vector<std::vector<Rat>>& rows);

/// Inverse of a square matrix, or an empty result if singular.
std::vector<std::vector<Rat>> inverse(const std::vector<std::vector<Rat>>& m);

}  // namespace propcalc::scalars
