#include "propcalc/wprop/z_bridge.hpp"

namespace propcalc::wprop {

using diagram::DiagramError;
using scalars::PolyT;

symgroup::GAElt z_to_group_algebra(const PropElt& a) {
  if (!a.sig().empty()) throw DiagramError("only elements over the empty signature live in Q[t]S_n");
  if (a.p() != a.q()) throw DiagramError("type (" + std::to_string(a.p()) + "," + std::to_string(a.q()) + ") is not square");
  symgroup::GAElt g(a.p());
  for (const auto& [m, c] : a.terms()) g.add(diagram::as_perm(m), PolyT::monomial(c, m.loops));
  return g;
}

PropElt group_algebra_to_z(const symgroup::GAElt& g) {
  PropElt a(Signature{}, g.n(), g.n());
  for (const auto& [sigma, c] : g.terms()) {
    CanonMonomial m = diagram::perm_monomial(sigma);
    for (int k = 0; k <= c.degree(); ++k) {
      m.loops = k;
      a.add(m, c.coeff(k));
    }
  }
  return a;
}

symgroup::GAElt contract_last(const symgroup::GAElt& g) {
  if (g.n() < 1) throw DiagramError("cannot contract a degree-0 element");
  const PropElt a = group_algebra_to_z(g);
  return z_to_group_algebra(contract(a, g.n(), g.n()));
}

symgroup::GAElt extend_by_identity(const symgroup::GAElt& g) {
  return z_to_group_algebra(tensor(group_algebra_to_z(g), identity()));
}

}  // namespace propcalc::wprop
