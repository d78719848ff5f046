#include "propcalc/zideal/contraction.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "propcalc/scalars/linalg.hpp"
#include "propcalc/wprop/z_bridge.hpp"

namespace propcalc::zideal {

using scalars::PolyT;
using scalars::Rat;
using symgroup::GAElt;
using symgroup::Partition;
using symgroup::Perm;

SymmetrizerContraction contract_symmetrizer(const symgroup::Tableau& tab) {
  const int n = tab.size();
  if (n < 1) throw std::invalid_argument("empty tableau");
  SymmetrizerContraction r;
  r.contraction = wprop::contract_last(symgroup::young_symmetrizer(tab));
  const symgroup::Tableau smaller = tab.without_max();
  r.reduced = symgroup::young_symmetrizer(smaller);
  // y_{T'} has coefficient 1 at the identity.
  r.factor = r.contraction.coefficient(Perm::identity(n - 1));
  const symgroup::Box b = tab.box_of(n);
  const PolyT expected = PolyT::t() + PolyT(Rat(b.diagonal()));
  if (r.factor != expected)
    throw std::logic_error("contracting y_T for T = " + tab.to_string() + " gave factor " + r.factor.to_string() +
                           ", expected " + expected.to_string());
  if (r.contraction != r.reduced * r.factor)
    throw std::logic_error("contraction of y_T for T = " + tab.to_string() + " is not a multiple of y_T'");
  return r;
}

Div2Report check_div2(const Partition& lambda) {
  Div2Report rep;
  const int n = lambda.size();
  if (n < 1) {
    rep.detail = "empty partition";
    return rep;
  }
  const GAElt e = symgroup::central_idempotent(lambda);
  const auto perms = Perm::all(n - 1);
  std::map<Perm, std::size_t> column;
  for (std::size_t k = 0; k < perms.size(); ++k) column[perms[k]] = k;

  std::map<Partition, symgroup::Box> removable;
  for (const auto& [nu, box] : symgroup::branch(lambda, symgroup::BranchDir::remove)) {
    removable.emplace(nu, box);
    const long d = nu.dimension();
    rep.expected_rank += static_cast<std::size_t>(d * d);
  }
  // Coordinates: (permutation, power of t), t-degree at most 1.
  scalars::RowReducer rows(2 * perms.size());
  for (const Perm& s : Perm::all(n)) {
    const GAElt x = wprop::contract_last(e * GAElt(s));
    scalars::SparseRow row;
    for (const auto& [p, c] : x.terms()) {
      if (c.degree() > 1) {
        rep.detail = "image has t-degree above 1";
        return rep;
      }
      for (int k = 0; k <= c.degree(); ++k)
        if (!c.coeff(k).is_zero()) row[2 * column.at(p) + static_cast<std::size_t>(k)] = c.coeff(k);
    }
    rows.add_row(std::move(row));
    GAElt rest = x;
    for (const Partition& nu : Partition::all(n - 1)) {
      const GAElt part = symgroup::bimodule_component(x, nu);
      rest -= part;
      auto it = removable.find(nu);
      if (it == removable.end()) {
        if (!part.is_zero()) {
          rep.detail = "image of e_" + lambda.to_string() + "[" + s.cycles() + "] has a component at " + nu.to_string();
          return rep;
        }
        continue;
      }
      const PolyT factor = PolyT::t() + PolyT(Rat(it->second.diagonal()));
      for (const auto& [p, c] : part.terms()) {
        auto [quot, rem] = scalars::divmod(c, factor);
        if (!rem.is_zero() || !quot.is_constant()) {
          rep.detail = "component at " + nu.to_string() + " is not (" + factor.to_string() + ") times a rational element";
          return rep;
        }
      }
    }
    if (!rest.is_zero()) {
      rep.detail = "isotypic components do not sum to the image";
      return rep;
    }
  }
  rep.rank = rows.rank();
  rep.ok = rep.rank == rep.expected_rank;
  if (!rep.ok) rep.detail = "rank " + std::to_string(rep.rank) + " but expected " + std::to_string(rep.expected_rank);
  return rep;
}

bool check_div1(const Partition& lambda, std::string* detail) {
  const int n = lambda.size();
  const GAElt ext = wprop::extend_by_identity(symgroup::central_idempotent(lambda));
  std::set<Partition> above;
  for (const auto& [mu, box] : symgroup::branch(lambda, symgroup::BranchDir::add)) above.insert(mu);
  GAElt total(n + 1);
  for (const Partition& mu : Partition::all(n + 1)) {
    const GAElt part = symgroup::bimodule_component(ext, mu);
    total += part;
    if (part.is_zero() == (above.count(mu) != 0)) {
      if (detail) *detail = "component at " + mu.to_string() + (part.is_zero() ? " vanishes" : " is nonzero");
      return false;
    }
  }
  if (total != ext) {
    if (detail) *detail = "components do not sum to e_lambda x id";
    return false;
  }
  return true;
}

}  // namespace propcalc::zideal
