#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "propcalc/scalars/mpoly.hpp"
#include "propcalc/scalars/rat.hpp"
#include "propcalc/symgroup/perm.hpp"

namespace propcalc::teval {

/// Sparse tensor of type (p,q) in dimension n. Keys hold the p upper
/// (input) indices followed by the q lower (output) indices, 0-based.
template <class S>
class Tensor {
public:
  using Key = std::vector<int>;

  Tensor() = default;
  Tensor(int dim, int p, int q) : dim_(dim), p_(p), q_(q) {
    if (dim < 0 || p < 0 || q < 0) throw std::invalid_argument("bad tensor shape");
  }

  /// The scalar s as a type (0,0) tensor.
  static Tensor scalar(int dim, const S& s) {
    Tensor t(dim, 0, 0);
    t.add({}, s);
    return t;
  }

  int dim() const { return dim_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const std::map<Key, S>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  S at(const Key& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? S(0) : it->second;
  }

  void add(const Key& k, const S& v) {
    check_key(k);
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  void set(const Key& k, const S& v) {
    check_key(k);
    if (v.is_zero()) entries_.erase(k);
    else entries_[k] = v;
  }

  /// Value of a type (0,0) tensor.
  S scalar_value() const {
    if (p_ != 0 || q_ != 0) throw std::invalid_argument("not a scalar tensor");
    return at({});
  }

  Tensor& operator+=(const Tensor& o) {
    check_shape(o);
    for (const auto& [k, v] : o.entries_) add(k, v);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_shape(o);
    for (const auto& [k, v] : o.entries_) add(k, v * scalars::Rat(-1));
    return *this;
  }
  Tensor& operator*=(const scalars::Rat& c) {
    if (c.is_zero()) entries_.clear();
    for (auto& [k, v] : entries_) v = v * c;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  void check_shape(const Tensor& o) const {
    if (dim_ != o.dim_ || p_ != o.p_ || q_ != o.q_) throw std::invalid_argument("tensor shapes differ");
  }

private:
  void check_key(const Key& k) const {
    if (static_cast<int>(k.size()) != p_ + q_) throw std::invalid_argument("tensor index of wrong length");
    for (int x : k)
      if (x < 0 || x >= dim_) throw std::out_of_range("tensor index out of range");
  }

  int dim_ = 0;
  int p_ = 0;
  int q_ = 0;
  std::map<Key, S> entries_;
};

using RatTensor = Tensor<scalars::Rat>;
using PolyTensor = Tensor<scalars::MPoly>;

/// Outer product; inputs of a then b, outputs of a then b.
template <class S>
Tensor<S> tensor_product(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor product across dimensions");
  Tensor<S> r(a.dim(), a.p() + b.p(), a.q() + b.q());
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) {
      typename Tensor<S>::Key k(ka.begin(), ka.begin() + a.p());
      k.insert(k.end(), kb.begin(), kb.begin() + b.p());
      k.insert(k.end(), ka.begin() + a.p(), ka.end());
      k.insert(k.end(), kb.begin() + b.p(), kb.end());
      r.add(k, va * vb);
    }
  return r;
}

/// Trace of upper index i against lower index j (1-based).
template <class S>
Tensor<S> contract(const Tensor<S>& a, int i, int j) {
  if (i < 1 || i > a.p() || j < 1 || j > a.q()) throw std::out_of_range("contraction index out of range");
  Tensor<S> r(a.dim(), a.p() - 1, a.q() - 1);
  const std::size_t ui = static_cast<std::size_t>(i - 1), dj = static_cast<std::size_t>(a.p() + j - 1);
  for (const auto& [k, v] : a.entries()) {
    if (k[ui] != k[dj]) continue;
    typename Tensor<S>::Key nk;
    for (std::size_t x = 0; x < k.size(); ++x)
      if (x != ui && x != dj) nk.push_back(k[x]);
    r.add(nk, v);
  }
  return r;
}

/// Moves upper index k to position σ(k) and lower index k to τ(k).
template <class S>
Tensor<S> act(const symgroup::Perm& sigma, const symgroup::Perm& tau, const Tensor<S>& a) {
  if (sigma.size() != a.p() || tau.size() != a.q()) throw std::invalid_argument("permutation degrees do not match tensor type");
  Tensor<S> r(a.dim(), a.p(), a.q());
  for (const auto& [k, v] : a.entries()) {
    typename Tensor<S>::Key nk(k.size());
    for (int x = 0; x < a.p(); ++x) nk[static_cast<std::size_t>(sigma[x])] = k[static_cast<std::size_t>(x)];
    for (int x = 0; x < a.q(); ++x)
      nk[static_cast<std::size_t>(a.p() + tau[x])] = k[static_cast<std::size_t>(a.p() + x)];
    r.add(nk, v);
  }
  return r;
}

/// Full contraction of a (p,q) tensor with a (q,p) tensor.
template <class S>
S pairing(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.dim() != b.dim() || a.p() != b.q() || a.q() != b.p()) throw std::invalid_argument("pairing needs dual tensor types");
  S acc(0);
  const auto p = static_cast<std::ptrdiff_t>(a.p());
  for (const auto& [ka, va] : a.entries()) {
    // b's inputs are a's outputs and b's outputs are a's inputs
    typename Tensor<S>::Key kb(ka.begin() + p, ka.end());
    kb.insert(kb.end(), ka.begin(), ka.begin() + p);
    auto it = b.entries().find(kb);
    if (it != b.entries().end()) acc += va * it->second;
  }
  return acc;
}

/// The tensor of σ: δ between upper index k and lower index σ(k).
RatTensor perm_tensor(const symgroup::Perm& sigma, int dim);

/// Entrywise specialization of polynomial entries.
RatTensor specialize(const PolyTensor& t, const std::function<scalars::Rat(scalars::VarId)>& point);
PolyTensor to_poly(const RatTensor& t);

}  // namespace propcalc::teval
