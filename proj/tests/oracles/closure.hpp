#pragma once

// Brute-force ideal closure inside the initial wheeled PROP, levels 0..L.
// Level m is Q[t]S_m, stored as coordinate vectors over the m! permutations
// in lexicographic one-line order. Each level keeps a Q[t]-module in Hermite
// form; the closure applies left/right transpositions, tensoring with a
// strand and contracting the last strand until nothing new appears.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "propcalc/scalars/poly_t.hpp"

namespace oracle {

using propcalc::scalars::PolyT;
using propcalc::scalars::Rat;
using OneLine = std::vector<int>;  // 0-based images
using QtVec = std::vector<PolyT>;

inline std::vector<OneLine> perms_of(int m) {
  std::vector<OneLine> out;
  OneLine p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (a b)(i) = a(b(i))
inline OneLine compose(const OneLine& a, const OneLine& b) {
  OneLine r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline std::vector<int> cycle_type(const OneLine& p) {
  std::vector<int> lens;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

// Hermite form of a Q[t]-submodule of Q[t]^cols.
class QtModule {
public:
  explicit QtModule(std::size_t cols) : cols_(cols) {}

  // Returns true if v was not already in the module.
  bool add(QtVec v) {
    if (contains(v)) return false;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        const Rat lead = v[c].leading();
        for (auto& x : v) x *= Rat(1) / lead;
        rows_.emplace(c, std::move(v));
        return true;
      }
      QtVec& r = it->second;
      const auto eg = propcalc::scalars::ext_gcd(r[c], v[c]);
      const PolyT a = propcalc::scalars::exact_div(r[c], eg.g);
      const PolyT b = propcalc::scalars::exact_div(v[c], eg.g);
      QtVec nr(cols_), nv(cols_);
      for (std::size_t k = 0; k < cols_; ++k) {
        nr[k] = eg.u * r[k] + eg.v * v[k];
        nv[k] = a * v[k] - b * r[k];
      }
      r = std::move(nr);
      v = std::move(nv);
    }
    return true;
  }

  bool contains(QtVec v) const {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      auto it = rows_.find(c);
      if (it == rows_.end()) return false;
      auto [q, rem] = propcalc::scalars::divmod(v[c], it->second[c]);
      if (!rem.is_zero()) return false;
      for (std::size_t k = c; k < cols_; ++k) v[k] -= q * it->second[k];
    }
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

private:
  std::size_t cols_;
  std::map<std::size_t, QtVec> rows_;
};

class Closure {
public:
  explicit Closure(int max_level) : max_level_(max_level) {
    for (int m = 0; m <= max_level; ++m) {
      perms_.push_back(perms_of(m));
      std::map<OneLine, std::size_t> idx;
      for (std::size_t k = 0; k < perms_.back().size(); ++k) idx[perms_.back()[k]] = k;
      index_.push_back(std::move(idx));
      modules_.emplace_back(perms_.back().size());
    }
  }

  int max_level() const { return max_level_; }
  const std::vector<OneLine>& perms(int m) const { return perms_[static_cast<std::size_t>(m)]; }
  std::size_t index(int m, const OneLine& p) const { return index_[static_cast<std::size_t>(m)].at(p); }
  QtVec zero(int m) const { return QtVec(perms(m).size()); }

  // Adds a generator and closes up.
  void generate(int m, const QtVec& v) {
    std::vector<std::pair<int, QtVec>> work{{m, v}};
    while (!work.empty()) {
      auto [lvl, x] = std::move(work.back());
      work.pop_back();
      if (!modules_[static_cast<std::size_t>(lvl)].add(x)) continue;
      for (int i = 0; i + 1 < lvl; ++i) {
        OneLine s(static_cast<std::size_t>(lvl));
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
        work.emplace_back(lvl, act(lvl, s, x, true));
        work.emplace_back(lvl, act(lvl, s, x, false));
      }
      if (lvl < max_level_) work.emplace_back(lvl + 1, extend(lvl, x));
      if (lvl > 0) work.emplace_back(lvl - 1, contract(lvl, x));
    }
  }

  bool contains(int m, const QtVec& v) const { return modules_[static_cast<std::size_t>(m)].contains(v); }

  // s*x if left, x*s otherwise
  QtVec act(int m, const OneLine& s, const QtVec& x, bool left) const {
    QtVec r = zero(m);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) r[index(m, left ? compose(s, perms(m)[k]) : compose(perms(m)[k], s))] += x[k];
    return r;
  }

  // [s] -> [s + fixed last point]
  QtVec extend(int m, const QtVec& x) const {
    QtVec r = zero(m + 1);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].is_zero()) continue;
      OneLine p = perms(m)[k];
      p.push_back(m);
      r[index(m + 1, p)] += x[k];
    }
    return r;
  }

  // Joins output m to input m: a fixed point closes into a loop (factor t),
  // otherwise the strand into m is routed on to s(m).
  QtVec contract(int m, const QtVec& x) const {
    QtVec r = zero(m - 1);
    const int last = m - 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].is_zero()) continue;
      const OneLine& s = perms(m)[k];
      OneLine p(s.begin(), s.end() - 1);
      PolyT c = x[k];
      if (s[static_cast<std::size_t>(last)] == last) {
        c *= PolyT::t();
      } else {
        for (auto& v : p)
          if (v == last) v = s[static_cast<std::size_t>(last)];
      }
      r[index(m - 1, p)] += c;
    }
    return r;
  }

private:
  int max_level_;
  std::vector<std::vector<OneLine>> perms_;
  std::vector<std::map<OneLine, std::size_t>> index_;
  std::vector<QtModule> modules_;
};

// Character values of S_1..S_3, by shape and cycle type.
inline Rat character(const std::vector<int>& shape, const std::vector<int>& type) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  const auto is = [](const std::vector<int>& a, std::initializer_list<int> b) { return a == std::vector<int>(b); };
  if (n == 1 || is(shape, {2}) || is(shape, {3})) return Rat(1);
  if (is(shape, {1, 1}) || is(shape, {1, 1, 1})) {
    int sign = 1;
    for (int l : type) sign *= (l % 2 == 0) ? -1 : 1;
    return Rat(sign);
  }
  if (is(shape, {2, 1})) {
    if (is(type, {1, 1, 1})) return Rat(2);
    if (is(type, {2, 1})) return Rat(0);
    return Rat(-1);
  }
  throw std::invalid_argument("character table only covers n <= 3");
}

// e_shape = dim/n! sum chi(s) s, computed from the tables above.
inline QtVec central_idempotent(const Closure& cl, const std::vector<int>& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  const auto& ps = cl.perms(n);
  std::vector<int> id_type(static_cast<std::size_t>(n), 1);
  const Rat scale = character(shape, id_type) / Rat(static_cast<long>(ps.size()));
  QtVec r = cl.zero(n);
  for (std::size_t k = 0; k < ps.size(); ++k) r[k] = PolyT(scale * character(shape, cycle_type(ps[k])));
  return r;
}

inline std::vector<std::vector<int>> shapes_of(int n) {
  switch (n) {
    case 0: return {{}};
    case 1: return {{1}};
    case 2: return {{2}, {1, 1}};
    case 3: return {{3}, {2, 1}, {1, 1, 1}};
  }
  throw std::invalid_argument("shapes only for n <= 3");
}

// g = f * prod over boxes (i,j) of C outside the shape of (t + j - i)
inline PolyT family_value(const PolyT& f, const std::set<std::pair<int, int>>& C, const std::vector<int>& shape) {
  PolyT g = f;
  for (const auto& [i, j] : C) {
    const bool inside = i <= static_cast<int>(shape.size()) && j <= shape[static_cast<std::size_t>(i - 1)];
    if (!inside) g *= PolyT::t() + PolyT(Rat(j - i));
  }
  return g;
}

// Closure of { g_shape * e_shape : |shape| <= L } for the ideal I(f, C).
inline Closure ideal_closure(const PolyT& f, const std::set<std::pair<int, int>>& C, int max_level = 3) {
  Closure cl(max_level);
  for (int n = 0; n <= max_level; ++n)
    for (const auto& shape : shapes_of(n)) {
      const PolyT g = family_value(f, C, shape);
      QtVec e = n == 0 ? QtVec{PolyT(1)} : central_idempotent(cl, shape);
      for (auto& x : e) x *= g;
      cl.generate(n, e);
    }
  return cl;
}

}  // namespace oracle
