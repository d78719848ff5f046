#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "propcalc/diagram/monomial.hpp"
#include "propcalc/diagram/signature.hpp"
#include "propcalc/wprop/prop_elt.hpp"

namespace propcalc::teval {

/// Thrown when an enumeration would exceed its size limit.
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct MonomialBounds {
  std::map<std::string, int> per_gen;  // missing generators get 0
  int total = -1;                      // cap on the box count, -1 for none
  int max_loops = 0;
  std::size_t limit = 200000;          // cap on wirings tried
};

/// All distinct monomials of type (p,q) within the bounds, sorted.
std::vector<diagram::CanonMonomial> enumerate_monomials(const diagram::Signature& sig, int p, int q,
                                                        const MonomialBounds& bounds);

struct KernelResult {
  std::vector<diagram::CanonMonomial> monomials;  // spanning set that was evaluated
  std::vector<wprop::PropElt> basis;              // basis of the kernel
};

/// Kernel of evaluation under the generic dimension-n representation,
/// restricted to the span of enumerate_monomials(sig, p, q, bounds).
KernelResult relation_kernel(const diagram::Signature& sig, int n, int p, int q, const MonomialBounds& bounds);

/// True if x lies in the Q-span of the given elements (all of one type).
bool in_span(const std::vector<wprop::PropElt>& basis, const wprop::PropElt& x);

}  // namespace propcalc::teval
