#pragma once

#include <string>
#include <vector>

#include "propcalc/scalars/poly_t.hpp"
#include "propcalc/symgroup/group_algebra.hpp"
#include "propcalc/symgroup/tableau.hpp"

namespace propcalc::zideal {

struct SymmetrizerContraction {
  scalars::PolyT factor;        // t + j - i for the box (i,j) holding n
  symgroup::GAElt reduced;      // y_{T'} for T' = T without n
  symgroup::GAElt contraction;  // ∂^n_n(y_T) as computed
};

/// Contracts the last strand of y_T and factors the result as
/// (t + j - i)·y_{T'}. Throws std::logic_error if that factorization fails.
SymmetrizerContraction contract_symmetrizer(const symgroup::Tableau& tab);

struct Div2Report {
  bool ok = false;
  std::size_t rank = 0;           // Q-rank of the images ∂(e_λ[σ])
  std::size_t expected_rank = 0;  // Σ over ν = λ - box of dim J_ν
  std::string detail;             // first failure, if any
};

/// Checks that ∂^n_n(J_λ) = ⊕_{ν = λ - (i,j)} (t + j - i)·J_ν as Q[t]-modules.
Div2Report check_div2(const symgroup::Partition& lambda);

/// Checks that e_μ·(e_λ ⊗ ↓) ≠ 0 exactly for μ = λ ∪ box.
bool check_div1(const symgroup::Partition& lambda, std::string* detail = nullptr);

}  // namespace propcalc::zideal
