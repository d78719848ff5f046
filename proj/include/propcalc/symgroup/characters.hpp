#pragma once

#include "propcalc/scalars/rat.hpp"
#include "propcalc/symgroup/partition.hpp"

namespace propcalc::symgroup {

/// χ_λ at the class of cycle type μ, by the Murnaghan–Nakayama rule.
/// Results are memoized process-wide. Throws on size mismatch.
scalars::Rat char_value(const Partition& lambda, const Partition& mu);

}  // namespace propcalc::symgroup
