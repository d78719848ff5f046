#pragma once

// Young symmetrizers and last-strand contraction on sparse group algebra
// elements, rebuilt from scratch on one-line permutations.

#include <map>
#include <vector>

#include "oracles/closure.hpp"

namespace oracle {

using Sparse = std::map<OneLine, PolyT>;
using Rows = std::vector<std::vector<int>>;  // 1-based entries

inline int sign_of(const OneLine& p) {
  int s = 1;
  for (int l : cycle_type(p)) s *= (l % 2 == 0) ? -1 : 1;
  return s;
}

inline void add_to(Sparse& a, const OneLine& p, const PolyT& c) {
  auto& x = a[p];
  x += c;
  if (x.is_zero()) a.erase(p);
}

inline Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) add_to(r, compose(pa, pb), ca * cb);
  return r;
}

inline Sparse single(const OneLine& p, const PolyT& c = PolyT(1)) { return Sparse{{p, c}}; }

inline int size_of(const Rows& rows) {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

// y = sum over column-preserving mu and row-preserving s of sgn(mu) [mu s]
inline Sparse young(const Rows& rows) {
  const int n = size_of(rows);
  std::vector<int> row_of(static_cast<std::size_t>(n)), col_of(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      row_of[static_cast<std::size_t>(rows[i][j] - 1)] = static_cast<int>(i);
      col_of[static_cast<std::size_t>(rows[i][j] - 1)] = static_cast<int>(j);
    }
  std::vector<OneLine> R, C;
  for (const auto& p : perms_of(n)) {
    bool in_r = true, in_c = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      in_r = in_r && row_of[x] == row_of[static_cast<std::size_t>(p[x])];
      in_c = in_c && col_of[x] == col_of[static_cast<std::size_t>(p[x])];
    }
    if (in_r) R.push_back(p);
    if (in_c) C.push_back(p);
  }
  Sparse y;
  for (const auto& mu : C)
    for (const auto& s : R) add_to(y, compose(mu, s), PolyT(Rat(sign_of(mu))));
  return y;
}

inline Rows without_max(Rows rows) {
  const int n = size_of(rows);
  for (auto& r : rows)
    if (!r.empty() && r.back() == n) r.pop_back();
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return rows;
}

inline std::pair<int, int> box_of(const Rows& rows, int entry) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == entry) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw std::invalid_argument("entry not in tableau");
}

// joins output m to input m, as in Closure::contract
inline Sparse contract_last(const Sparse& a, int m) {
  Sparse r;
  const int last = m - 1;
  for (const auto& [s, c] : a) {
    OneLine p(s.begin(), s.end() - 1);
    PolyT k = c;
    if (s[static_cast<std::size_t>(last)] == last) k *= PolyT::t();
    else
      for (auto& v : p)
        if (v == last) v = s[static_cast<std::size_t>(last)];
    add_to(r, p, k);
  }
  return r;
}

// the tableau filled row by row
inline Rows row_reading(const std::vector<int>& shape) {
  Rows rows;
  int k = 1;
  for (int len : shape) {
    rows.emplace_back();
    for (int j = 0; j < len; ++j) rows.back().push_back(k++);
  }
  return rows;
}

inline QtVec dense(const Sparse& a, int m, const std::map<OneLine, std::size_t>& index) {
  QtVec v(index.size());
  for (const auto& [p, c] : a) v[index.at(p)] += c;
  (void)m;
  return v;
}

// Compares the Q[t]-span of the contractions of [a] y_T [b] with the span of
// (t + j - i)[a] y_{T_nu} [b] over the shapes nu = lambda - (i,j).
inline bool div2_holds(const std::vector<int>& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  const auto perms_n = perms_of(n), perms_m = perms_of(n - 1);
  std::map<OneLine, std::size_t> index;
  for (std::size_t k = 0; k < perms_m.size(); ++k) index[perms_m[k]] = k;
  const Sparse y = young(row_reading(shape));

  std::vector<QtVec> lhs, rhs;
  for (const auto& a : perms_n)
    for (const auto& b : perms_n) lhs.push_back(dense(contract_last(mul(mul(single(a), y), single(b)), n), n - 1, index));
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool removable = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!removable) continue;
    std::vector<int> nu = shape;
    const int row = static_cast<int>(i) + 1, col = shape[i];
    if (--nu[i] == 0) nu.pop_back();
    const Sparse ynu = nu.empty() ? single(OneLine{}) : young(row_reading(nu));
    const PolyT f = PolyT::t() + PolyT(Rat(col - row));
    for (const auto& a : perms_m)
      for (const auto& b : perms_m) {
        Sparse x = mul(mul(single(a), ynu), single(b));
        for (auto& [p, c] : x) c *= f;
        rhs.push_back(dense(x, n - 1, index));
      }
  }
  QtModule L(perms_m.size()), Rm(perms_m.size());
  for (const auto& v : lhs) L.add(v);
  for (const auto& v : rhs) Rm.add(v);
  for (const auto& v : lhs)
    if (!Rm.contains(v)) return false;
  for (const auto& v : rhs)
    if (!L.contains(v)) return false;
  return true;
}

}  // namespace oracle
