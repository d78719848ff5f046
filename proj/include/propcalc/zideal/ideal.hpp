#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "propcalc/scalars/poly_t.hpp"
#include "propcalc/symgroup/group_algebra.hpp"
#include "propcalc/symgroup/partition.hpp"
#include "propcalc/wprop/prop_elt.hpp"

namespace propcalc::zideal {

using scalars::PolyT;
using symgroup::Box;
using symgroup::GAElt;
using symgroup::Partition;

/// Normal form (f, C) of an ideal of the initial wheeled PROP, or the zero
/// ideal. f is monic.
struct IdealData {
  bool zero = false;
  PolyT f = PolyT(1);
  std::set<Box> C;

  static IdealData zero_ideal() { return {true, PolyT(), {}}; }
  /// Throws std::invalid_argument unless f is monic and boxes are positive.
  void check() const;
  friend bool operator==(const IdealData&, const IdealData&) = default;
};

/// g_λ = f · ∏_{(i,j) ∈ C, (i,j) ∉ λ} (t + j - i). Throws for the zero ideal.
PolyT g_lambda(const IdealData& ideal, const Partition& lambda);

/// Partition-indexed family of monic polynomials g_λ (all zero for the zero
/// ideal). Values are computed on demand and memoized; copies share the memo.
class CompatFamily {
public:
  using Rule = std::function<PolyT(const Partition&)>;
  explicit CompatFamily(Rule rule);

  static CompatFamily of(const IdealData& ideal);
  static CompatFamily zero();

  PolyT g(const Partition& lambda) const;

private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Compatibility: for λ = μ ∪ box on diagonal d, g_μ = g_λ or g_μ = g_λ·(t+d).
/// Checks all partitions of size ≤ bound; returns a description of the first
/// violation, or an empty string.
std::string compatibility_violation(const CompatFamily& F, int bound);

/// Smallest compatible family with g_λ | h: g_ν = h·∏_{b ∈ λ∖ν}(t + d(b)).
CompatFamily principal_ideal(const Partition& lambda, const PolyT& h);

/// Pointwise gcd; throws std::logic_error if the result is not compatible up
/// to `bound`.
CompatFamily ideal_sum(const CompatFamily& A, const CompatFamily& B, int bound = 6);

/// Family of the ideal generated by the given elements of Q[t]S_n (mixed n).
CompatFamily generate(const std::vector<GAElt>& elements, int bound = 6);

/// Reads off (f, C) from the n×n rectangle. Throws std::domain_error if g_∅
/// disagrees with f·∏(t+j-i), i.e. jumps escape the rectangle.
IdealData normal_form(const CompatFamily& F, int n);

/// True iff g_λ divides the λ-content of z for every λ ⊢ n.
bool member(const IdealData& ideal, const GAElt& z);
/// Elements of type (p,q) with p ≠ q are members iff zero.
bool member(const IdealData& ideal, const wprop::PropElt& z);

enum class IdealClass { not_prime, prime_not_maximal, maximal };
IdealClass classify(const IdealData& ideal);
std::string to_string(IdealClass c);

/// Bounding rectangle of C, one row per line, "■" for boxes in C and "□"
/// elsewhere.
std::string picture(const IdealData& ideal);

}  // namespace propcalc::zideal
