#include "propcalc/symgroup/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace propcalc::symgroup {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

// All permutations of {1..n} that only permute entries inside each group.
std::vector<Perm> stabilizer(int n, const std::vector<std::vector<int>>& groups) {
  std::vector<Perm> out{Perm::identity(n)};
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Perm> local;
    std::vector<int> img = sorted;
    do {
      std::vector<int> line(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 1;
      for (std::size_t k = 0; k < sorted.size(); ++k) line[static_cast<std::size_t>(sorted[k] - 1)] = img[k];
      local.emplace_back(line);
    } while (std::next_permutation(img.begin(), img.end()));
    std::vector<Perm> next;
    next.reserve(out.size() * local.size());
    for (const auto& a : out)
      for (const auto& b : local) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows, bool) : rows_(std::move(rows)), shape_(shape_of(rows_)) {}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  shape_ = shape_of(rows_);
  const int n = shape_.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("tableau entries must be 1..n once each");
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && rows_[i][j - 1] >= v) throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v) throw std::invalid_argument("tableau columns must increase");
    }
  }
}

Tableau Tableau::parse(const std::string& text) {
  std::vector<std::vector<int>> rows;
  bool open = false;
  int cur = -1;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw std::invalid_argument("tableau entry outside braces in '" + text + "'");
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
      continue;
    }
    if (cur >= 0) rows.back().push_back(cur);
    cur = -1;
    if (c == '{' && !open) {
      open = true;
      rows.emplace_back();
    } else if (c == '}' && open) {
      open = false;
    } else if (c != ',' && !std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("cannot parse tableau '" + text + "'");
    }
  }
  if (open || cur >= 0) throw std::invalid_argument("unterminated tableau '" + text + "'");
  return Tableau(std::move(rows));
}

Tableau Tableau::row(int n) {
  std::vector<int> r;
  for (int k = 1; k <= n; ++k) r.push_back(k);
  return Tableau({r});
}

Tableau Tableau::column(int n) {
  std::vector<std::vector<int>> rows;
  for (int k = 1; k <= n; ++k) rows.push_back({k});
  return Tableau(rows);
}

std::vector<Tableau> Tableau::standard(const Partition& shape) {
  if (shape.empty()) return {Tableau({}, true)};
  std::vector<Tableau> out;
  const int n = shape.size();
  for (const Box& b : shape.removable()) {
    for (const Tableau& smaller : standard(shape.without(b))) {
      auto rows = smaller.rows_;
      if (static_cast<int>(rows.size()) < b.i) rows.emplace_back();
      rows[static_cast<std::size_t>(b.i - 1)].push_back(n);
      out.push_back(Tableau(std::move(rows), true));
    }
  }
  return out;
}

Box Tableau::box_of(int entry) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == entry) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw std::out_of_range("entry not in tableau");
}

Tableau Tableau::without_max() const {
  if (rows_.empty()) throw std::invalid_argument("empty tableau");
  const Box b = box_of(size());
  auto rows = rows_;
  rows[static_cast<std::size_t>(b.i - 1)].pop_back();
  if (rows.back().empty()) rows.pop_back();
  return Tableau(std::move(rows), true);
}

std::vector<Perm> Tableau::row_group() const { return stabilizer(size(), rows_); }

std::vector<Perm> Tableau::column_group() const {
  std::vector<std::vector<int>> cols;
  for (int j = 1; j <= shape_.row(1); ++j) {
    std::vector<int> c;
    for (const auto& r : rows_)
      if (static_cast<int>(r.size()) >= j) c.push_back(r[static_cast<std::size_t>(j - 1)]);
    cols.push_back(c);
  }
  return stabilizer(size(), cols);
}

std::string Tableau::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s.push_back('{');
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) s.push_back(',');
      s += std::to_string(r[k]);
    }
    s.push_back('}');
  }
  return s.empty() ? "{}" : s;
}

}  // namespace propcalc::symgroup
