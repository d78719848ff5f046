#include "propcalc/teval/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "propcalc/scalars/linalg.hpp"
#include "propcalc/teval/eval.hpp"

namespace propcalc::teval {

using diagram::CanonMonomial;
using diagram::PortGraph;
using diagram::Port;

namespace {

void enumerate_wirings(const diagram::Signature& sig, int p, int q, const std::vector<std::string>& boxes, int max_loops,
                       std::size_t& budget, std::set<CanonMonomial>& out) {
  std::vector<Port> sources, sinks;
  for (int i = 0; i < p; ++i) sources.push_back({-1, i});
  for (int j = 0; j < q; ++j) sinks.push_back({-1, j});
  PortGraph g;
  g.p = p;
  g.q = q;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const auto ar = sig.arity(boxes[b]);
    g.gens.push_back(boxes[b]);
    g.arity_in.push_back(ar.p);
    g.from_box.emplace_back(static_cast<std::size_t>(ar.q));
    for (int k = 0; k < ar.q; ++k) sources.push_back({static_cast<int>(b), k});
    for (int k = 0; k < ar.p; ++k) sinks.push_back({static_cast<int>(b), k});
  }
  if (sources.size() != sinks.size()) return;
  g.from_input.resize(static_cast<std::size_t>(p));

  std::vector<std::size_t> perm(sinks.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (budget == 0) throw SizeLimitError("monomial enumeration exceeds the size limit");
    --budget;
    for (std::size_t s = 0; s < sources.size(); ++s) {
      const Port& src = sources[s];
      const Port& dst = sinks[perm[s]];
      if (src.is_free()) g.from_input[static_cast<std::size_t>(src.index)] = dst;
      else g.from_box[static_cast<std::size_t>(src.box)][static_cast<std::size_t>(src.index)] = dst;
    }
    for (int l = 0; l <= max_loops; ++l) {
      g.loops = l;
      out.insert(diagram::canonical(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void enumerate_counts(const diagram::Signature& sig, int p, int q, const MonomialBounds& bounds,
                      const std::vector<std::pair<std::string, int>>& gens, std::size_t k, std::vector<std::string>& boxes,
                      std::size_t& budget, std::set<CanonMonomial>& out) {
  if (k == gens.size()) {
    enumerate_wirings(sig, p, q, boxes, bounds.max_loops, budget, out);
    return;
  }
  const std::size_t before = boxes.size();
  for (int c = 0; c <= gens[k].second; ++c) {
    if (c > 0) {
      if (bounds.total >= 0 && static_cast<int>(boxes.size()) >= bounds.total) break;
      boxes.push_back(gens[k].first);
    }
    enumerate_counts(sig, p, q, bounds, gens, k + 1, boxes, budget, out);
  }
  boxes.resize(before);
}

}  // namespace

std::vector<CanonMonomial> enumerate_monomials(const diagram::Signature& sig, int p, int q, const MonomialBounds& bounds) {
  if (p < 0 || q < 0 || bounds.max_loops < 0) throw std::invalid_argument("negative type or loop bound");
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& [name, ar] : sig.gens()) {
    auto it = bounds.per_gen.find(name);
    const int b = it == bounds.per_gen.end() ? 0 : it->second;
    if (b < 0) throw std::invalid_argument("negative degree bound for " + name);
    gens.emplace_back(name, b);
  }
  for (const auto& [name, b] : bounds.per_gen)
    if (!sig.has(name)) throw diagram::DiagramError("degree bound for unknown generator " + name);
  std::set<CanonMonomial> out;
  std::vector<std::string> boxes;
  std::size_t budget = bounds.limit;
  enumerate_counts(sig, p, q, bounds, gens, 0, boxes, budget, out);
  return {out.begin(), out.end()};
}

KernelResult relation_kernel(const diagram::Signature& sig, int n, int p, int q, const MonomialBounds& bounds) {
  KernelResult res;
  res.monomials = enumerate_monomials(sig, p, q, bounds);
  const PolyRep rep = generic_rep(sig, n);
  // coordinate (tensor entry, polynomial monomial) -> row over monomial indices
  std::map<std::pair<PolyTensor::Key, scalars::MonoKey>, scalars::SparseRow> coords;
  for (std::size_t m = 0; m < res.monomials.size(); ++m) {
    const PolyTensor t = eval_monomial(rep, res.monomials[m]);
    for (const auto& [key, poly] : t.entries())
      for (const auto& [mono, c] : poly.terms()) coords[{key, mono}][m] = c;
  }
  scalars::RowReducer rr(res.monomials.size());
  for (auto& [coord, row] : coords) rr.add_row(std::move(row));
  for (const auto& v : rr.nullspace()) {
    wprop::PropElt e(sig, p, q);
    for (std::size_t m = 0; m < v.size(); ++m)
      if (!v[m].is_zero()) e.add(res.monomials[m], v[m]);
    res.basis.push_back(std::move(e));
  }
  return res;
}

bool in_span(const std::vector<wprop::PropElt>& basis, const wprop::PropElt& x) {
  std::map<CanonMonomial, std::size_t> column;
  auto col = [&](const CanonMonomial& m) { return column.try_emplace(m, column.size()).first->second; };
  for (const auto& b : basis)
    for (const auto& [m, c] : b.terms()) col(m);
  for (const auto& [m, c] : x.terms()) col(m);
  scalars::RowReducer rr(column.size());
  for (const auto& b : basis) {
    scalars::SparseRow row;
    for (const auto& [m, c] : b.terms()) row[column.at(m)] = c;
    rr.add_row(std::move(row));
  }
  scalars::SparseRow row;
  for (const auto& [m, c] : x.terms()) row[column.at(m)] = c;
  return rr.in_span(std::move(row));
}

}  // namespace propcalc::teval
