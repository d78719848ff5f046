#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "propcalc/scalars/poly_t.hpp"
#include "propcalc/symgroup/partition.hpp"
#include "propcalc/symgroup/perm.hpp"
#include "propcalc/symgroup/tableau.hpp"

namespace propcalc::symgroup {

using scalars::PolyT;

/// Element of Q[t]Σ_n.
class GAElt {
public:
  explicit GAElt(int n = 0) : n_(n) {}
  GAElt(const Perm& p, PolyT coeff = PolyT(1));

  static GAElt identity(int n) { return GAElt(Perm::identity(n)); }

  int n() const { return n_; }
  const std::map<Perm, PolyT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PolyT coefficient(const Perm& p) const;
  void add(const Perm& p, const PolyT& c);

  /// Monic gcd of all coefficients; 0 for the zero element.
  PolyT content() const;
  /// Substitutes t := value in every coefficient.
  GAElt specialize(const scalars::Rat& value) const;

  GAElt operator-() const;
  GAElt& operator+=(const GAElt& o);
  GAElt& operator-=(const GAElt& o);
  GAElt& operator*=(const PolyT& c);
  friend GAElt operator+(GAElt a, const GAElt& b) { return a += b; }
  friend GAElt operator-(GAElt a, const GAElt& b) { return a -= b; }
  friend GAElt operator*(GAElt a, const PolyT& c) { return a *= c; }
  friend GAElt operator*(const PolyT& c, GAElt a) { return a *= c; }
  /// Convolution product; [a][b] = [a*b].
  friend GAElt operator*(const GAElt& a, const GAElt& b);
  friend bool operator==(const GAElt&, const GAElt&) = default;

  /// E.g. "(t-1)*[e] + (t-1)*[(1 2)]".
  std::string to_string() const;

private:
  void check_size(int n) const;
  int n_;
  std::map<Perm, PolyT> terms_;
};

std::ostream& operator<<(std::ostream& os, const GAElt& g);

/// e_λ = (χ_λ(e)/n!) Σ_σ χ_λ(σ⁻¹)[σ].
GAElt central_idempotent(const Partition& lambda);

/// y_T = Σ_{σ∈R(T), μ∈C(T)} sgn(μ)[μσ].
GAElt young_symmetrizer(const Tableau& tab);

/// Σ_σ sgn(σ)[σ].
GAElt alternator(int n);

/// e_λ·z.
GAElt bimodule_component(const GAElt& z, const Partition& lambda);

/// Generator of the Q[t]-ideal h with (two-sided span of z_λ) = (h)⊗J_λ.
PolyT component_content(const GAElt& z, const Partition& lambda);

}  // namespace propcalc::symgroup
