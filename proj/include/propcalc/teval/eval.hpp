#pragma once

#include <map>
#include <string>

#include "propcalc/diagram/monomial.hpp"
#include "propcalc/diagram/signature.hpp"
#include "propcalc/teval/tensor.hpp"
#include "propcalc/wprop/prop_elt.hpp"

namespace propcalc::teval {

/// Assignment of a tensor of matching type to every generator.
template <class S>
struct Representation {
  diagram::Signature sig;
  int dim = 0;
  std::map<std::string, Tensor<S>> tensors;

  /// Throws diagram::DiagramError for missing generators or mismatched types.
  void check() const;
};

using RatRep = Representation<scalars::Rat>;
using PolyRep = Representation<scalars::MPoly>;

/// Contracts the generator tensors along the wires of m; every loop gives a
/// factor of the dimension.
template <class S>
Tensor<S> eval_monomial(const Representation<S>& rep, const diagram::CanonMonomial& m);

template <class S>
Tensor<S> eval(const Representation<S>& rep, const wprop::PropElt& a);

/// Tensors with independent indeterminates a[G][k1,...,kq][i1,...,ip]
/// (outputs first, 1-based).
PolyRep generic_rep(const diagram::Signature& sig, int dim);

std::string generic_entry_name(const std::string& gen, const std::vector<int>& down, const std::vector<int>& up);

extern template struct Representation<scalars::Rat>;
extern template struct Representation<scalars::MPoly>;
extern template Tensor<scalars::Rat> eval_monomial(const RatRep&, const diagram::CanonMonomial&);
extern template Tensor<scalars::MPoly> eval_monomial(const PolyRep&, const diagram::CanonMonomial&);
extern template Tensor<scalars::Rat> eval(const RatRep&, const wprop::PropElt&);
extern template Tensor<scalars::MPoly> eval(const PolyRep&, const wprop::PropElt&);

}  // namespace propcalc::teval
