#pragma once

#include "propcalc/symgroup/group_algebra.hpp"
#include "propcalc/wprop/prop_elt.hpp"

namespace propcalc::wprop {

/// The isomorphism of the (n,n) part of the initial wheeled PROP with
/// Q[t]Σ_n: the wire diagram of σ with k loops goes to t^k[σ].
symgroup::GAElt z_to_group_algebra(const PropElt& a);
PropElt group_algebra_to_z(const symgroup::GAElt& g);

/// ∂^n_n on Q[t]Σ_n, computed through diagrams.
symgroup::GAElt contract_last(const symgroup::GAElt& g);

/// g ⊗ ↓ in Q[t]Σ_{n+1}.
symgroup::GAElt extend_by_identity(const symgroup::GAElt& g);

}  // namespace propcalc::wprop
