#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "propcalc/teval/eval.hpp"
#include "propcalc/teval/kernel.hpp"
#include "propcalc/teval/tensor.hpp"
#include "propcalc/wprop/prop_elt.hpp"

namespace propcalc::teval {

/// Structure constants L^{a,b}_c with [x_a, x_b] = Σ_c L^{a,b}_c x_c for
/// "sl2" (basis e,h,f), "so3" (basis x,y,z, cross product), "nonabelian2"
/// ([x,y] = y) and "abelian3". Throws std::invalid_argument for other names.
RatTensor lie_structure(const std::string& name);
std::vector<std::string> lie_algebra_names();

struct LieReport {
  bool antisymmetric = false;
  bool jacobi = false;
  RatTensor killing;                 // type (2,0)
  bool killing_ok = false;           // diagram agrees with tr(ad a ad b)
  bool nondegenerate = false;
  bool casimir_ok = false;           // only meaningful if nondegenerate
  bool lowered_alternating = false;  // only meaningful if nondegenerate
  bool is_lie() const { return antisymmetric && jacobi; }
  bool ok() const { return is_lie() && killing_ok && (!nondegenerate || (casimir_ok && lowered_alternating)); }
};

/// Lie axioms and Killing form checks, all phrased as diagrams over
/// {L : 2 -> 1, K : 2 -> 0, C : 0 -> 2} and evaluated. K is tr(ad a ad b)
/// computed from matrices and C its inverse. L must be type (2,1), dim n.
LieReport check_lie(int n, const RatTensor& L);

/// The diagrams behind check_lie, for display.
std::vector<std::pair<std::string, std::string>> lie_diagrams();

/// Lifts an element over the empty signature to `sig`.
wprop::PropElt lift(const wprop::PropElt& a, const diagram::Signature& sig);

/// alt(n+1) with its first n strands closed up through copies of A : 1 -> 1;
/// the result has type (1,1) over {A : 1 -> 1}.
wprop::PropElt cayley_hamilton_element(int n);

/// True if cayley_hamilton_element(n) evaluates to zero at A (type (1,1)).
bool check_cayley_hamilton(int n, const RatTensor& A);

/// Permutation tensors of type (p,p) in dimension n, one per σ ∈ Σ_p; empty
/// unless p = q.
std::vector<RatTensor> invariant_span_gl(int p, int q, int n);

/// Rank of the matrix of pairings ⟨a_i, b_j⟩.
std::size_t gram_rank(const std::vector<RatTensor>& as, const std::vector<RatTensor>& bs);

/// Trace-like functional on closed monomials.
using ClosedFunctional = std::function<scalars::Rat(const diagram::CanonMonomial&)>;

struct AnnihilationReport {
  bool unital = false;
  bool multiplicative = false;
  bool kills_alt = false;
  std::size_t probes = 0;
  std::string detail;
  bool ok() const { return unital && multiplicative && kills_alt; }
};

/// Necessary conditions for f to factor through a dimension-d representation:
/// f(1) = 1, f(a ⊗ b) = f(a)f(b) on closed probes, and f⟨Alt_{d+1}, B⟩ = 0
/// for every probe B of type (d+1,d+1). Probes carry at most probe_bound boxes.
AnnihilationReport annihilation_test(const ClosedFunctional& f, const diagram::Signature& sig, int d, int probe_bound);

/// f(m) = eval(rep, m) for a closed monomial m.
ClosedFunctional trace_functional(const RatRep& rep);

}  // namespace propcalc::teval
