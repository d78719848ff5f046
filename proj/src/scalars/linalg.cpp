#include "propcalc/scalars/linalg.hpp"

#include <stdexcept>

namespace propcalc::scalars {

namespace {

void axpy(SparseRow& row, const Rat& factor, const SparseRow& other) {
  for (const auto& [c, v] : other) {
    auto [it, inserted] = row.try_emplace(c, Rat(0));
    it->second -= factor * v;
    if (it->second.is_zero()) row.erase(it);
  }
}

}  // namespace

void RowReducer::reduce(SparseRow& row) const {
  for (const auto& [pc, prow] : pivots_) {
    auto it = row.find(pc);
    if (it == row.end()) continue;
    const Rat factor = it->second;
    axpy(row, factor, prow);
  }
}

bool RowReducer::add_row(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= columns_) throw std::out_of_range("row entry beyond column count");
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }
  reduce(row);
  if (row.empty()) return false;
  const std::size_t pc = row.begin()->first;
  const Rat inv = Rat(1) / row.begin()->second;
  for (auto& [c, v] : row) v *= inv;
  for (auto& [qc, qrow] : pivots_) {
    auto it = qrow.find(pc);
    if (it == qrow.end()) continue;
    const Rat factor = it->second;
    axpy(qrow, factor, row);
  }
  pivots_.emplace(pc, std::move(row));
  return true;
}

bool RowReducer::add_row(const std::vector<Rat>& dense) {
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (!dense[c].is_zero()) row.emplace(c, dense[c]);
  return add_row(std::move(row));
}

bool RowReducer::in_span(SparseRow row) const {
  for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
  reduce(row);
  return row.empty();
}

std::vector<std::vector<Rat>> RowReducer::nullspace() const {
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < columns_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Rat> x(columns_, Rat(0));
    x[f] = Rat(1);
    for (const auto& [pc, prow] : pivots_) {
      auto it = prow.find(f);
      if (it != prow.end()) x[pc] = -it->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  RowReducer r(rows.front().size());
  for (const auto& row : rows) r.add_row(row);
  return r.rank();
}

std::vector<std::vector<Rat>> inverse(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = Rat(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    const Rat inv = Rat(1) / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace propcalc::scalars
