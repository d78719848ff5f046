#include "propcalc/diagram/monomial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace propcalc::diagram {

std::vector<Port> PortGraph::sources_of_outputs() const {
  std::vector<Port> src(static_cast<std::size_t>(q));
  for (int i = 0; i < p; ++i)
    if (from_input[static_cast<std::size_t>(i)].is_free()) src[static_cast<std::size_t>(from_input[static_cast<std::size_t>(i)].index)] = {-1, i};
  for (int b = 0; b < box_count(); ++b)
    for (std::size_t k = 0; k < from_box[static_cast<std::size_t>(b)].size(); ++k) {
      const Port s = from_box[static_cast<std::size_t>(b)][k];
      if (s.is_free()) src[static_cast<std::size_t>(s.index)] = {b, static_cast<int>(k)};
    }
  return src;
}

std::vector<std::vector<Port>> PortGraph::sources_of_boxes() const {
  std::vector<std::vector<Port>> src(gens.size());
  for (std::size_t b = 0; b < gens.size(); ++b) src[b].resize(static_cast<std::size_t>(arity_in[b]));
  for (int i = 0; i < p; ++i) {
    const Port s = from_input[static_cast<std::size_t>(i)];
    if (!s.is_free()) src[static_cast<std::size_t>(s.box)][static_cast<std::size_t>(s.index)] = {-1, i};
  }
  for (int b = 0; b < box_count(); ++b)
    for (std::size_t k = 0; k < from_box[static_cast<std::size_t>(b)].size(); ++k) {
      const Port s = from_box[static_cast<std::size_t>(b)][k];
      if (!s.is_free()) src[static_cast<std::size_t>(s.box)][static_cast<std::size_t>(s.index)] = {b, static_cast<int>(k)};
    }
  return src;
}

void PortGraph::check() const {
  const std::size_t nb = gens.size();
  if (arity_in.size() != nb || from_box.size() != nb || static_cast<int>(from_input.size()) != p || loops < 0)
    throw DiagramError("inconsistent port graph sizes");
  std::vector<int> out_hits(static_cast<std::size_t>(q), 0);
  std::vector<std::vector<int>> box_hits(nb);
  for (std::size_t b = 0; b < nb; ++b) box_hits[b].assign(static_cast<std::size_t>(arity_in[b]), 0);
  auto hit = [&](const Port& s) {
    if (s.is_free()) {
      if (s.index < 0 || s.index >= q) throw DiagramError("wire to missing free output");
      ++out_hits[static_cast<std::size_t>(s.index)];
    } else {
      if (s.box >= static_cast<int>(nb) || s.index < 0 || s.index >= arity_in[static_cast<std::size_t>(s.box)])
        throw DiagramError("wire to missing box input");
      ++box_hits[static_cast<std::size_t>(s.box)][static_cast<std::size_t>(s.index)];
    }
  };
  for (const auto& s : from_input) hit(s);
  for (const auto& outs : from_box)
    for (const auto& s : outs) hit(s);
  for (int h : out_hits)
    if (h != 1) throw DiagramError("free output not fed by exactly one wire");
  for (const auto& hs : box_hits)
    for (int h : hs)
      if (h != 1) throw DiagramError("box input not fed by exactly one wire");
}

namespace {

auto key(const PortGraph& g) { return std::tie(g.p, g.q, g.gens, g.arity_in, g.from_input, g.from_box, g.loops); }

std::strong_ordering compare(const PortGraph& a, const PortGraph& b) {
  if (auto c = a.p <=> b.p; c != 0) return c;
  if (auto c = a.q <=> b.q; c != 0) return c;
  if (auto c = a.gens.size() <=> b.gens.size(); c != 0) return c;
  if (auto c = a.gens <=> b.gens; c != 0) return c;
  if (auto c = a.arity_in <=> b.arity_in; c != 0) return c;
  if (auto c = a.from_input <=> b.from_input; c != 0) return c;
  if (auto c = a.from_box <=> b.from_box; c != 0) return c;
  return a.loops <=> b.loops;
}

// Breadth-first numbering: box ports are scanned inputs first, then outputs,
// each in port order.
void traverse(const PortGraph& g, const std::vector<std::vector<Port>>& src_box, std::deque<int>& queue,
              std::vector<int>& ids, std::vector<int>& order) {
  auto visit = [&](const Port& s) {
    if (s.is_free() || ids[static_cast<std::size_t>(s.box)] >= 0) return;
    ids[static_cast<std::size_t>(s.box)] = static_cast<int>(order.size());
    order.push_back(s.box);
    queue.push_back(s.box);
  };
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (const Port& s : src_box[static_cast<std::size_t>(b)]) visit(s);
    for (const Port& s : g.from_box[static_cast<std::size_t>(b)]) visit(s);
  }
}

std::string encode_component(const PortGraph& g, const std::vector<int>& order, const std::vector<int>& ids) {
  std::string s;
  for (int b : order) {
    s += g.gens[static_cast<std::size_t>(b)];
    s.push_back('\x1f');
    s += std::to_string(g.arity_in[static_cast<std::size_t>(b)]);
    for (const Port& t : g.from_box[static_cast<std::size_t>(b)]) {
      s.push_back(':');
      s += std::to_string(ids[static_cast<std::size_t>(t.box)]);
      s.push_back('.');
      s += std::to_string(t.index);
    }
    s.push_back('\x1e');
  }
  return s;
}

}  // namespace

bool operator==(const CanonMonomial& a, const CanonMonomial& b) { return key(a) == key(b); }
std::strong_ordering operator<=>(const CanonMonomial& a, const CanonMonomial& b) { return compare(a, b); }

CanonMonomial canonical(PortGraph g) {
  g.check();
  const int nb = g.box_count();
  const auto src_box = g.sources_of_boxes();
  const auto src_out = g.sources_of_outputs();

  std::vector<int> ids(static_cast<std::size_t>(nb), -1);
  std::vector<int> order;
  std::deque<int> queue;
  auto seed = [&](const Port& s) {
    if (s.is_free() || ids[static_cast<std::size_t>(s.box)] >= 0) return;
    ids[static_cast<std::size_t>(s.box)] = static_cast<int>(order.size());
    order.push_back(s.box);
    queue.push_back(s.box);
  };
  for (const Port& s : g.from_input) seed(s);
  for (const Port& s : src_out) seed(s);
  traverse(g, src_box, queue, ids, order);

  // Closed components: try every start box carrying the least generator name.
  std::vector<std::pair<std::string, std::vector<int>>> closed;
  for (int b0 = 0; b0 < nb; ++b0) {
    if (ids[static_cast<std::size_t>(b0)] >= 0) continue;
    std::vector<int> scratch(static_cast<std::size_t>(nb), -1), comp;
    std::deque<int> cq{b0};
    scratch[static_cast<std::size_t>(b0)] = 0;
    comp.push_back(b0);
    traverse(g, src_box, cq, scratch, comp);
    std::string least = g.gens[static_cast<std::size_t>(comp.front())];
    for (int b : comp) least = std::min(least, g.gens[static_cast<std::size_t>(b)]);
    std::string best;
    std::vector<int> best_order;
    for (int s : comp) {
      if (g.gens[static_cast<std::size_t>(s)] != least) continue;
      std::vector<int> local(static_cast<std::size_t>(nb), -1), lorder{s};
      local[static_cast<std::size_t>(s)] = 0;
      std::deque<int> lq{s};
      traverse(g, src_box, lq, local, lorder);
      std::string enc = encode_component(g, lorder, local);
      if (best_order.empty() || enc < best) {
        best = std::move(enc);
        best_order = std::move(lorder);
      }
    }
    for (int b : comp) ids[static_cast<std::size_t>(b)] = nb;  // mark as handled
    closed.emplace_back(std::move(best), std::move(best_order));
  }
  std::sort(closed.begin(), closed.end());
  for (const auto& [enc, ord] : closed) order.insert(order.end(), ord.begin(), ord.end());

  std::vector<int> pos(static_cast<std::size_t>(nb));
  for (int k = 0; k < nb; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  auto relabel = [&](Port s) {
    if (!s.is_free()) s.box = pos[static_cast<std::size_t>(s.box)];
    return s;
  };
  CanonMonomial c;
  c.p = g.p;
  c.q = g.q;
  c.loops = g.loops;
  for (const Port& s : g.from_input) c.from_input.push_back(relabel(s));
  for (int b : order) {
    c.gens.push_back(g.gens[static_cast<std::size_t>(b)]);
    c.arity_in.push_back(g.arity_in[static_cast<std::size_t>(b)]);
    std::vector<Port> outs;
    for (const Port& s : g.from_box[static_cast<std::size_t>(b)]) outs.push_back(relabel(s));
    c.from_box.push_back(std::move(outs));
  }
  return c;
}

CanonMonomial canonicalize(const Molecule& m, const std::vector<std::string>& input_order,
                           const std::vector<std::string>& output_order, const Signature* sig) {
  validate(m, sig);
  std::map<std::string, std::pair<int, int>> consumer;  // var -> (atom, port)
  for (std::size_t a = 0; a < m.atoms.size(); ++a)
    for (std::size_t k = 0; k < m.atoms[a].inputs.size(); ++k)
      consumer[m.atoms[a].inputs[k]] = {static_cast<int>(a), static_cast<int>(k)};

  auto fin = free_inputs(m), fout = free_outputs(m);
  auto same_set = [](std::vector<std::string> order, const std::vector<std::string>& sorted) {
    std::sort(order.begin(), order.end());
    return order == sorted;
  };
  if (!same_set(input_order, fin) || !same_set(output_order, fout)) {
    auto show = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
      return "{" + s + "}";
    };
    throw DiagramError("ordering mismatch: free inputs are " + show(fin) + " and free outputs " + show(fout));
  }
  std::map<std::string, int> out_pos;
  for (std::size_t j = 0; j < output_order.size(); ++j) out_pos[output_order[j]] = static_cast<int>(j);

  PortGraph g;
  g.p = static_cast<int>(input_order.size());
  g.q = static_cast<int>(output_order.size());
  std::vector<int> box_of(m.atoms.size(), -1);
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    if (m.atoms[a].is_identity()) continue;
    box_of[a] = g.box_count();
    g.gens.push_back(m.atoms[a].gen);
    g.arity_in.push_back(static_cast<int>(m.atoms[a].inputs.size()));
  }
  std::vector<bool> used(m.atoms.size(), false);
  auto follow = [&](std::string v) -> Port {
    while (true) {
      auto it = consumer.find(v);
      if (it == consumer.end()) return {-1, out_pos.at(v)};
      const auto [a, k] = it->second;
      const Atom& atom = m.atoms[static_cast<std::size_t>(a)];
      if (!atom.is_identity()) return {box_of[static_cast<std::size_t>(a)], k};
      used[static_cast<std::size_t>(a)] = true;
      v = atom.outputs[0];
    }
  };
  for (const auto& x : input_order) g.from_input.push_back(follow(x));
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    if (m.atoms[a].is_identity()) continue;
    std::vector<Port> outs;
    for (const auto& y : m.atoms[a].outputs) outs.push_back(follow(y));
    g.from_box.push_back(std::move(outs));
  }
  // Identity atoms not reached from any source form closed cycles.
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    if (!m.atoms[a].is_identity() || used[a]) continue;
    ++g.loops;
    std::size_t cur = a;
    while (!used[cur]) {
      used[cur] = true;
      auto it = consumer.find(m.atoms[cur].outputs[0]);
      if (it == consumer.end() || !m.atoms[static_cast<std::size_t>(it->second.first)].is_identity())
        throw DiagramError("internal: open identity chain");
      cur = static_cast<std::size_t>(it->second.first);
    }
  }
  return canonical(std::move(g));
}

Expanded expand(const CanonMonomial& m, VarGen& gen) {
  Expanded e;
  std::vector<std::string> in_var;
  for (int i = 0; i < m.p; ++i) in_var.push_back(gen.next());
  std::vector<std::vector<std::string>> box_out(m.gens.size());
  for (std::size_t b = 0; b < m.gens.size(); ++b)
    for (std::size_t k = 0; k < m.from_box[b].size(); ++k) box_out[b].push_back(gen.next());

  std::vector<std::string> out_var(static_cast<std::size_t>(m.q));
  std::vector<Atom> atoms(m.gens.size());
  for (std::size_t b = 0; b < m.gens.size(); ++b) {
    atoms[b].gen = m.gens[b];
    atoms[b].inputs.resize(static_cast<std::size_t>(m.arity_in[b]));
    atoms[b].outputs = box_out[b];
  }
  auto connect = [&](const std::string& var, const Port& sink) {
    if (sink.is_free()) out_var[static_cast<std::size_t>(sink.index)] = var;
    else atoms[static_cast<std::size_t>(sink.box)].inputs[static_cast<std::size_t>(sink.index)] = var;
  };
  for (std::size_t b = 0; b < m.gens.size(); ++b)
    for (std::size_t k = 0; k < m.from_box[b].size(); ++k) connect(box_out[b][k], m.from_box[b][k]);
  std::vector<Atom> wires;
  for (int i = 0; i < m.p; ++i) {
    const Port s = m.from_input[static_cast<std::size_t>(i)];
    if (s.is_free()) {
      const std::string y = gen.next();
      wires.push_back(Atom::identity(in_var[static_cast<std::size_t>(i)], y));
      out_var[static_cast<std::size_t>(s.index)] = y;
    } else {
      connect(in_var[static_cast<std::size_t>(i)], s);
    }
  }
  e.molecule.atoms = std::move(atoms);
  for (auto& w : wires) e.molecule.atoms.push_back(std::move(w));
  for (int l = 0; l < m.loops; ++l) {
    const std::string v = gen.next();
    e.molecule.atoms.push_back(Atom::identity(v, v));
  }
  e.inputs = std::move(in_var);
  e.outputs = std::move(out_var);
  return e;
}

std::string to_string(const CanonMonomial& m, bool drop_loops) {
  CanonMonomial shown = m;
  if (drop_loops) shown.loops = 0;
  VarGen gen("v");
  const Expanded e = expand(shown, gen);
  std::string s = e.molecule.to_string();
  if (m.p + m.q > 0) {
    auto join = [](const std::vector<std::string>& v) {
      std::string r;
      for (std::size_t k = 0; k < v.size(); ++k) r += (k ? "," : "") + v[k];
      return r;
    };
    s += (s.empty() ? "" : " ") + ("[" + join(e.inputs) + ";" + join(e.outputs) + "]");
  }
  return s.empty() ? "1" : s;
}

CanonMonomial unit_monomial() { return CanonMonomial{}; }

CanonMonomial identity_monomial() { return perm_monomial(symgroup::Perm::identity(1)); }

CanonMonomial loop_monomial(int count) {
  CanonMonomial m;
  m.loops = count;
  return m;
}

CanonMonomial perm_monomial(const symgroup::Perm& sigma) {
  CanonMonomial m;
  m.p = m.q = sigma.size();
  for (int i = 0; i < sigma.size(); ++i) m.from_input.push_back({-1, sigma[i]});
  return m;
}

symgroup::Perm as_perm(const CanonMonomial& m) {
  if (!m.gens.empty() || m.p != m.q) throw DiagramError("monomial is not a permutation diagram");
  std::vector<int> line;
  for (const Port& s : m.from_input) line.push_back(s.index + 1);
  return symgroup::Perm(line);
}

CanonMonomial tensor(const CanonMonomial& a, const CanonMonomial& b) {
  PortGraph g;
  g.p = a.p + b.p;
  g.q = a.q + b.q;
  g.loops = a.loops + b.loops;
  const int shift = a.box_count();
  auto moved = [&](Port s) {
    if (s.is_free()) s.index += a.q;
    else s.box += shift;
    return s;
  };
  g.gens = a.gens;
  g.gens.insert(g.gens.end(), b.gens.begin(), b.gens.end());
  g.arity_in = a.arity_in;
  g.arity_in.insert(g.arity_in.end(), b.arity_in.begin(), b.arity_in.end());
  g.from_input = a.from_input;
  for (const Port& s : b.from_input) g.from_input.push_back(moved(s));
  g.from_box = a.from_box;
  for (const auto& outs : b.from_box) {
    std::vector<Port> o;
    for (const Port& s : outs) o.push_back(moved(s));
    g.from_box.push_back(std::move(o));
  }
  return canonical(std::move(g));
}

CanonMonomial contract(const CanonMonomial& a, int i, int j) {
  if (i < 1 || i > a.p || j < 1 || j > a.q)
    throw DiagramError("contraction indices (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for type (" +
                       std::to_string(a.p) + "," + std::to_string(a.q) + ")");
  PortGraph g = a;
  const int ii = i - 1, jj = j - 1;
  const Port src = g.sources_of_outputs()[static_cast<std::size_t>(jj)];
  const Port sink = g.from_input[static_cast<std::size_t>(ii)];
  if (src.is_free() && src.index == ii) {
    ++g.loops;
  } else if (src.is_free()) {
    g.from_input[static_cast<std::size_t>(src.index)] = sink;
  } else {
    g.from_box[static_cast<std::size_t>(src.box)][static_cast<std::size_t>(src.index)] = sink;
  }
  g.from_input.erase(g.from_input.begin() + ii);
  --g.p;
  --g.q;
  auto shift = [&](Port& s) {
    if (s.is_free() && s.index > jj) --s.index;
  };
  for (Port& s : g.from_input) shift(s);
  for (auto& outs : g.from_box)
    for (Port& s : outs) shift(s);
  return canonical(std::move(g));
}

CanonMonomial act(const symgroup::Perm& sigma, const symgroup::Perm& tau, const CanonMonomial& a) {
  if (sigma.size() != a.p || tau.size() != a.q)
    throw DiagramError("permutation degrees (" + std::to_string(sigma.size()) + "," + std::to_string(tau.size()) +
                       ") do not match type (" + std::to_string(a.p) + "," + std::to_string(a.q) + ")");
  PortGraph g = a;
  auto moved = [&](Port s) {
    if (s.is_free()) s.index = tau[s.index];
    return s;
  };
  for (int k = 0; k < a.p; ++k) g.from_input[static_cast<std::size_t>(sigma[k])] = moved(a.from_input[static_cast<std::size_t>(k)]);
  for (auto& outs : g.from_box)
    for (Port& s : outs) s = moved(s);
  return canonical(std::move(g));
}

CanonMonomial pairing(const CanonMonomial& a, const CanonMonomial& b) {
  if (a.p != b.q || a.q != b.p)
    throw DiagramError("pairing needs dual types, got (" + std::to_string(a.p) + "," + std::to_string(a.q) + ") and (" +
                       std::to_string(b.p) + "," + std::to_string(b.q) + ")");
  CanonMonomial m = tensor(a, b);
  for (int k = 0; k < a.q; ++k) m = contract(m, a.p + 1, 1);
  for (int k = 0; k < a.p; ++k) m = contract(m, 1, 1);
  return m;
}

}  // namespace propcalc::diagram
