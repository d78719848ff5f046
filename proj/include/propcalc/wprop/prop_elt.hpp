#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "propcalc/diagram/monomial.hpp"
#include "propcalc/diagram/signature.hpp"
#include "propcalc/scalars/poly_t.hpp"
#include "propcalc/scalars/rat.hpp"
#include "propcalc/symgroup/perm.hpp"

namespace propcalc::wprop {

using diagram::CanonMonomial;
using diagram::Signature;
using scalars::Rat;

/// Rational linear combination of monomials of one type (p,q) over a signature.
class PropElt {
public:
  PropElt() = default;
  PropElt(Signature sig, int p, int q) : sig_(std::move(sig)), p_(p), q_(q) {}

  static PropElt monomial(const Signature& sig, const CanonMonomial& m, const Rat& c = Rat(1));
  /// Parses the diagram grammar. Over the empty signature, t^k in a
  /// coefficient becomes k extra loops. All nonzero terms must share a type.
  static PropElt parse(std::string_view text, const Signature& sig);

  const Signature& sig() const { return sig_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const std::map<CanonMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const CanonMonomial& m) const;
  void add(const CanonMonomial& m, const Rat& c);

  PropElt operator-() const;
  PropElt& operator+=(const PropElt& o);
  PropElt& operator-=(const PropElt& o);
  PropElt& operator*=(const Rat& c);
  friend PropElt operator+(PropElt a, const PropElt& b) { return a += b; }
  friend PropElt operator-(PropElt a, const PropElt& b) { return a -= b; }
  friend PropElt operator*(PropElt a, const Rat& c) { return a *= c; }
  friend PropElt operator*(const Rat& c, PropElt a) { return a *= c; }
  friend bool operator==(const PropElt&, const PropElt&) = default;

  /// Over the empty signature loops are folded into polynomial coefficients
  /// in t; otherwise they print as id^v_v atoms.
  std::string to_string() const;

private:
  void check_compatible(const PropElt& o) const;
  Signature sig_;
  int p_ = 0;
  int q_ = 0;
  std::map<CanonMonomial, Rat> terms_;
};

std::ostream& operator<<(std::ostream& os, const PropElt& a);

PropElt unit(const Signature& sig = {});
PropElt identity(const Signature& sig = {});
/// t^k as an element of type (0,0).
PropElt loops(int k, const Signature& sig = {});
PropElt perm_elt(const symgroup::Perm& sigma, const Signature& sig = {});
/// Σ_{σ∈Σ_k} sgn(σ)[σ] over the empty signature.
PropElt alt(int k);

PropElt tensor(const PropElt& a, const PropElt& b);
PropElt contract(const PropElt& a, int i, int j);
PropElt act(const symgroup::Perm& sigma, const symgroup::Perm& tau, const PropElt& a);
PropElt pairing(const PropElt& a, const PropElt& b);

/// Image under the homomorphism sending each generator G to psi.at(G).
/// Every psi value must lie over `target` and have G's type.
PropElt substitute(const PropElt& a, const std::map<std::string, PropElt>& psi, const Signature& target);

}  // namespace propcalc::wprop
