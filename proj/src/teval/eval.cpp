#include "propcalc/teval/eval.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace propcalc::teval {

using diagram::CanonMonomial;
using diagram::DiagramError;
using diagram::Port;

template <class S>
void Representation<S>::check() const {
  for (const auto& [name, ar] : sig.gens()) {
    auto it = tensors.find(name);
    if (it == tensors.end()) throw DiagramError("no tensor given for generator " + name);
    const Tensor<S>& t = it->second;
    if (t.p() != ar.p || t.q() != ar.q)
      throw DiagramError("tensor for " + name + " has type (" + std::to_string(t.p()) + "," + std::to_string(t.q()) +
                         "), expected (" + std::to_string(ar.p) + "," + std::to_string(ar.q) + ")");
    if (t.dim() != dim) throw DiagramError("tensor for " + name + " has dimension " + std::to_string(t.dim()));
  }
  for (const auto& [name, t] : tensors)
    if (!sig.has(name)) throw DiagramError("tensor given for unknown generator " + name);
}

namespace {

/// A sparse relation over wire variables.
template <class S>
struct Factor {
  std::vector<int> vars;
  std::map<std::vector<int>, S> rows;
};

template <class S>
Factor<S> box_factor(const Tensor<S>& t, const std::vector<int>& raw_vars) {
  Factor<S> f;
  std::vector<std::size_t> first;  // position of each distinct var in raw_vars
  for (std::size_t i = 0; i < raw_vars.size(); ++i)
    if (std::find(f.vars.begin(), f.vars.end(), raw_vars[i]) == f.vars.end()) {
      f.vars.push_back(raw_vars[i]);
      first.push_back(i);
    }
  for (const auto& [k, v] : t.entries()) {
    bool consistent = true;
    for (std::size_t i = 0; i < raw_vars.size() && consistent; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (raw_vars[i] == raw_vars[j] && k[i] != k[j]) {
          consistent = false;
          break;
        }
    if (!consistent) continue;
    std::vector<int> key;
    for (std::size_t i : first) key.push_back(k[i]);
    auto [it, inserted] = f.rows.try_emplace(key, v);
    if (!inserted) it->second += v;
  }
  std::erase_if(f.rows, [](const auto& kv) { return kv.second.is_zero(); });
  return f;
}

template <class S>
Factor<S> marginalize(const Factor<S>& f, const std::set<int>& keep) {
  Factor<S> r;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < f.vars.size(); ++i)
    if (keep.count(f.vars[i])) {
      r.vars.push_back(f.vars[i]);
      pos.push_back(i);
    }
  if (r.vars.size() == f.vars.size()) return f;
  for (const auto& [k, v] : f.rows) {
    std::vector<int> key;
    for (std::size_t i : pos) key.push_back(k[i]);
    auto [it, inserted] = r.rows.try_emplace(key, v);
    if (!inserted) it->second += v;
  }
  std::erase_if(r.rows, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

template <class S>
Factor<S> join(const Factor<S>& a, const Factor<S>& b) {
  std::vector<std::size_t> a_shared, b_shared, b_rest;
  for (std::size_t j = 0; j < b.vars.size(); ++j) {
    auto it = std::find(a.vars.begin(), a.vars.end(), b.vars[j]);
    if (it == a.vars.end()) {
      b_rest.push_back(j);
    } else {
      a_shared.push_back(static_cast<std::size_t>(it - a.vars.begin()));
      b_shared.push_back(j);
    }
  }
  Factor<S> r;
  r.vars = a.vars;
  for (std::size_t j : b_rest) r.vars.push_back(b.vars[j]);
  std::map<std::vector<int>, std::vector<const std::pair<const std::vector<int>, S>*>> index;
  for (const auto& row : b.rows) {
    std::vector<int> key;
    for (std::size_t j : b_shared) key.push_back(row.first[j]);
    index[key].push_back(&row);
  }
  for (const auto& [ka, va] : a.rows) {
    std::vector<int> key;
    for (std::size_t i : a_shared) key.push_back(ka[i]);
    auto it = index.find(key);
    if (it == index.end()) continue;
    for (const auto* row : it->second) {
      std::vector<int> k = ka;
      for (std::size_t j : b_rest) k.push_back(row->first[j]);
      S v = va * row->second;
      auto [jt, inserted] = r.rows.try_emplace(std::move(k), v);
      if (!inserted) jt->second += v;
    }
  }
  std::erase_if(r.rows, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

template <class S>
std::set<int> needed_vars(const std::vector<Factor<S>>& fs, std::size_t skip, const std::set<int>& free_vars) {
  std::set<int> keep = free_vars;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (i != skip) keep.insert(fs[i].vars.begin(), fs[i].vars.end());
  return keep;
}

}  // namespace

template <class S>
Tensor<S> eval_monomial(const Representation<S>& rep, const CanonMonomial& m) {
  const int n = rep.dim;
  Tensor<S> result(n, m.p, m.q);

  // One variable per source: free inputs first, then box outputs.
  std::vector<std::vector<int>> out_var(static_cast<std::size_t>(m.box_count()));
  int next = m.p;
  for (int b = 0; b < m.box_count(); ++b)
    for (std::size_t k = 0; k < m.from_box[static_cast<std::size_t>(b)].size(); ++k) out_var[static_cast<std::size_t>(b)].push_back(next++);
  auto var_of = [&](const Port& src) { return src.is_free() ? src.index : out_var[static_cast<std::size_t>(src.box)][static_cast<std::size_t>(src.index)]; };

  const auto src_out = m.sources_of_outputs();
  const auto src_box = m.sources_of_boxes();
  std::vector<int> up_vars, down_vars;
  for (int i = 0; i < m.p; ++i) up_vars.push_back(i);
  for (const Port& s : src_out) down_vars.push_back(var_of(s));
  std::set<int> free_vars(up_vars.begin(), up_vars.end());
  free_vars.insert(down_vars.begin(), down_vars.end());

  std::vector<Factor<S>> factors;
  for (int b = 0; b < m.box_count(); ++b) {
    auto it = rep.tensors.find(m.gens[static_cast<std::size_t>(b)]);
    if (it == rep.tensors.end()) throw DiagramError("no tensor given for generator " + m.gens[static_cast<std::size_t>(b)]);
    std::vector<int> raw;
    for (const Port& s : src_box[static_cast<std::size_t>(b)]) raw.push_back(var_of(s));
    raw.insert(raw.end(), out_var[static_cast<std::size_t>(b)].begin(), out_var[static_cast<std::size_t>(b)].end());
    factors.push_back(box_factor(it->second, raw));
    if (factors.back().rows.empty()) return result;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) factors[i] = marginalize(factors[i], needed_vars(factors, i, free_vars));

  while (factors.size() > 1) {
    // Greedy: join the cheapest pair, preferring pairs that share a wire.
    std::size_t bi = 0, bj = 1;
    std::pair<int, double> best{2, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        bool shares = false;
        for (int v : factors[i].vars)
          if (std::find(factors[j].vars.begin(), factors[j].vars.end(), v) != factors[j].vars.end()) shares = true;
        const std::pair<int, double> cost{shares ? 0 : 1,
                                          static_cast<double>(factors[i].rows.size()) * static_cast<double>(factors[j].rows.size())};
        if (cost < best) {
          best = cost;
          bi = i;
          bj = j;
        }
      }
    Factor<S> joined = join(factors[bi], factors[bj]);
    factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(bj));
    factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(bi));
    if (joined.rows.empty()) return result;
    factors.push_back(std::move(joined));
    factors.back() = marginalize(factors.back(), needed_vars(factors, factors.size() - 1, free_vars));
  }

  Factor<S> last;
  if (factors.empty()) last.rows.emplace(std::vector<int>{}, S(1));
  else last = std::move(factors.front());

  // Free variables untouched by any box come from free-to-free wires.
  std::vector<int> open;
  for (int v : free_vars)
    if (std::find(last.vars.begin(), last.vars.end(), v) == last.vars.end()) open.push_back(v);
  if (n == 0 && !open.empty()) return result;

  S scale(1);
  for (int l = 0; l < m.loops; ++l) scale = scale * S(n);
  if (scale.is_zero()) return result;

  std::map<int, int> value;
  for (const auto& [k, v] : last.rows) {
    for (std::size_t i = 0; i < last.vars.size(); ++i) value[last.vars[i]] = k[i];
    std::vector<int> odo(open.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < open.size(); ++i) value[open[i]] = odo[i];
      typename Tensor<S>::Key key;
      for (int x : up_vars) key.push_back(value[x]);
      for (int x : down_vars) key.push_back(value[x]);
      result.add(key, v * scale);
      std::size_t pos = 0;
      while (pos < odo.size() && ++odo[pos] == n) odo[pos++] = 0;
      if (pos == odo.size()) break;
    }
  }
  return result;
}

template <class S>
Tensor<S> eval(const Representation<S>& rep, const wprop::PropElt& a) {
  Tensor<S> r(rep.dim, a.p(), a.q());
  for (const auto& [m, c] : a.terms()) {
    Tensor<S> t = eval_monomial(rep, m);
    t *= c;
    r += t;
  }
  return r;
}

std::string generic_entry_name(const std::string& gen, const std::vector<int>& down, const std::vector<int>& up) {
  auto list = [](const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i] + 1);
    return s;
  };
  return "a[" + gen + "][" + list(down) + "][" + list(up) + "]";
}

PolyRep generic_rep(const diagram::Signature& sig, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  PolyRep rep;
  rep.sig = sig;
  rep.dim = dim;
  for (const auto& [name, ar] : sig.gens()) {
    PolyTensor t(dim, ar.p, ar.q);
    std::vector<int> idx(static_cast<std::size_t>(ar.p + ar.q), 0);
    for (;;) {
      std::vector<int> up(idx.begin(), idx.begin() + ar.p), down(idx.begin() + ar.p, idx.end());
      t.add(idx, scalars::MPoly::variable(generic_entry_name(name, down, up)));
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == dim) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    rep.tensors.emplace(name, std::move(t));
  }
  return rep;
}

template struct Representation<scalars::Rat>;
template struct Representation<scalars::MPoly>;
template Tensor<scalars::Rat> eval_monomial(const RatRep&, const CanonMonomial&);
template Tensor<scalars::MPoly> eval_monomial(const PolyRep&, const CanonMonomial&);
template Tensor<scalars::Rat> eval(const RatRep&, const wprop::PropElt&);
template Tensor<scalars::MPoly> eval(const PolyRep&, const wprop::PropElt&);

}  // namespace propcalc::teval
