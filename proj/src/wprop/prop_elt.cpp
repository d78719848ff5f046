#include "propcalc/wprop/prop_elt.hpp"

#include <ostream>

#include "propcalc/diagram/parser.hpp"

namespace propcalc::wprop {

using diagram::DiagramError;
using scalars::PolyT;

PropElt PropElt::monomial(const Signature& sig, const CanonMonomial& m, const Rat& c) {
  PropElt a(sig, m.p, m.q);
  a.add(m, c);
  return a;
}

PropElt PropElt::parse(std::string_view text, const Signature& sig) {
  const auto terms = diagram::parse_expression(text, sig);
  PropElt out(sig, 0, 0);
  bool typed = false;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    CanonMonomial m = diagram::canonicalize(t.molecule, t.inputs, t.outputs, &sig);
    if (!typed) {
      out.p_ = m.p;
      out.q_ = m.q;
      typed = true;
    } else if (m.p != out.p_ || m.q != out.q_) {
      throw DiagramError("terms of different types (" + std::to_string(out.p_) + "," + std::to_string(out.q_) + ") and (" +
                         std::to_string(m.p) + "," + std::to_string(m.q) + ")");
    }
    for (int k = 0; k <= t.coeff.degree(); ++k) {
      CanonMonomial mk = m;
      mk.loops += k;
      out.add(mk, t.coeff.coeff(k));
    }
  }
  return out;
}

Rat PropElt::coefficient(const CanonMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void PropElt::add(const CanonMonomial& m, const Rat& c) {
  if (m.p != p_ || m.q != q_)
    throw DiagramError("monomial of type (" + std::to_string(m.p) + "," + std::to_string(m.q) + ") added to element of type (" +
                       std::to_string(p_) + "," + std::to_string(q_) + ")");
  for (const auto& g : m.gens)
    if (!sig_.has(g)) throw DiagramError("generator " + g + " is not in the signature");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PropElt::check_compatible(const PropElt& o) const {
  if (!(sig_ == o.sig_)) throw DiagramError("elements over different signatures");
  if (p_ != o.p_ || q_ != o.q_)
    throw DiagramError("adding elements of types (" + std::to_string(p_) + "," + std::to_string(q_) + ") and (" +
                       std::to_string(o.p_) + "," + std::to_string(o.q_) + ")");
}

PropElt PropElt::operator-() const {
  PropElt r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

PropElt& PropElt::operator+=(const PropElt& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PropElt& PropElt::operator-=(const PropElt& o) { return *this += -o; }

PropElt& PropElt::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

namespace {

std::string compact(const PolyT& p) {
  std::string s;
  for (char c : p.to_string())
    if (c != ' ') s.push_back(c);
  return s;
}

}  // namespace

std::string PropElt::to_string() const {
  std::map<CanonMonomial, PolyT> grouped;
  const bool fold = sig_.empty();
  for (const auto& [m, c] : terms_) {
    CanonMonomial key = m;
    int k = 0;
    if (fold) {
      k = key.loops;
      key.loops = 0;
    }
    grouped[key] += PolyT::monomial(c, k);
  }
  if (grouped.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : grouped) {
    const std::string body = diagram::to_string(m);
    const bool scalar = body == "1";
    bool negative = false;
    std::string coeff;
    if (c.term_count() == 1) {
      negative = c.leading().sign() < 0;
      const PolyT mag = negative ? -c : c;
      if (scalar) coeff = compact(mag);
      else if (!mag.is_one()) coeff = compact(mag) + "*";
    } else {
      coeff = (scalar && grouped.size() == 1) ? c.to_string() : "(" + compact(c) + ")" + (scalar ? "" : "*");
    }
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    s += coeff + (scalar ? "" : body);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const PropElt& a) { return os << a.to_string(); }

PropElt unit(const Signature& sig) { return PropElt::monomial(sig, diagram::unit_monomial()); }
PropElt identity(const Signature& sig) { return PropElt::monomial(sig, diagram::identity_monomial()); }
PropElt loops(int k, const Signature& sig) { return PropElt::monomial(sig, diagram::loop_monomial(k)); }
PropElt perm_elt(const symgroup::Perm& sigma, const Signature& sig) {
  return PropElt::monomial(sig, diagram::perm_monomial(sigma));
}

PropElt alt(int k) {
  PropElt a(Signature{}, k, k);
  for (const auto& s : symgroup::Perm::all(k)) a.add(diagram::perm_monomial(s), Rat(s.sign()));
  return a;
}

PropElt tensor(const PropElt& a, const PropElt& b) {
  if (!(a.sig() == b.sig())) throw DiagramError("tensor of elements over different signatures");
  PropElt r(a.sig(), a.p() + b.p(), a.q() + b.q());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add(diagram::tensor(ma, mb), ca * cb);
  return r;
}

PropElt contract(const PropElt& a, int i, int j) {
  if (i < 1 || i > a.p() || j < 1 || j > a.q())
    throw DiagramError("contraction indices (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for type (" +
                       std::to_string(a.p()) + "," + std::to_string(a.q()) + ")");
  PropElt r(a.sig(), a.p() - 1, a.q() - 1);
  for (const auto& [m, c] : a.terms()) r.add(diagram::contract(m, i, j), c);
  return r;
}

PropElt act(const symgroup::Perm& sigma, const symgroup::Perm& tau, const PropElt& a) {
  if (sigma.size() != a.p() || tau.size() != a.q())
    throw DiagramError("permutation degrees do not match type (" + std::to_string(a.p()) + "," + std::to_string(a.q()) + ")");
  PropElt r(a.sig(), a.p(), a.q());
  for (const auto& [m, c] : a.terms()) r.add(diagram::act(sigma, tau, m), c);
  return r;
}

PropElt pairing(const PropElt& a, const PropElt& b) {
  if (!(a.sig() == b.sig())) throw DiagramError("pairing of elements over different signatures");
  if (a.p() != b.q() || a.q() != b.p())
    throw DiagramError("pairing needs dual types, got (" + std::to_string(a.p()) + "," + std::to_string(a.q()) + ") and (" +
                       std::to_string(b.p()) + "," + std::to_string(b.q()) + ")");
  PropElt r(a.sig(), 0, 0);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add(diagram::pairing(ma, mb), ca * cb);
  return r;
}

PropElt substitute(const PropElt& a, const std::map<std::string, PropElt>& psi, const Signature& target) {
  for (const auto& [name, ar] : a.sig().gens()) {
    auto it = psi.find(name);
    if (it == psi.end()) continue;
    if (!(it->second.sig() == target)) throw DiagramError("image of " + name + " is not over the target signature");
    if (it->second.p() != ar.p || it->second.q() != ar.q)
      throw DiagramError("image of " + name + " has type (" + std::to_string(it->second.p()) + "," +
                         std::to_string(it->second.q()) + "), expected (" + std::to_string(ar.p) + "," +
                         std::to_string(ar.q) + ")");
  }
  PropElt r(target, a.p(), a.q());
  for (const auto& [m, c] : a.terms()) {
    diagram::VarGen outer("o");
    const diagram::Expanded e = diagram::expand(m, outer);
    const std::size_t nb = m.gens.size();
    std::vector<std::vector<std::pair<const CanonMonomial*, Rat>>> choices(nb);
    bool vanishes = false;
    for (std::size_t b = 0; b < nb; ++b) {
      auto it = psi.find(m.gens[b]);
      if (it == psi.end()) throw DiagramError("no image given for generator " + m.gens[b]);
      for (const auto& [mm, cc] : it->second.terms()) choices[b].emplace_back(&mm, cc);
      if (choices[b].empty()) vanishes = true;
    }
    if (vanishes) continue;
    // Multilinear expansion: one term of psi(G) per box, odometer style.
    std::vector<std::size_t> pick(nb, 0);
    while (true) {
      diagram::Molecule mol;
      Rat coeff = c;
      for (std::size_t b = 0; b < nb; ++b) {
        const auto& [img, cc] = choices[b][pick[b]];
        coeff *= cc;
        diagram::VarGen inner("i" + std::to_string(b) + "x");
        const diagram::Expanded ie = diagram::expand(*img, inner);
        std::map<std::string, std::string> rename;
        const diagram::Atom& box = e.molecule.atoms[b];
        for (std::size_t k = 0; k < ie.inputs.size(); ++k) rename[ie.inputs[k]] = box.inputs[k];
        for (std::size_t k = 0; k < ie.outputs.size(); ++k) rename[ie.outputs[k]] = box.outputs[k];
        for (diagram::Atom at : ie.molecule.atoms) {
          for (auto& x : at.inputs)
            if (auto f = rename.find(x); f != rename.end()) x = f->second;
          for (auto& y : at.outputs)
            if (auto f = rename.find(y); f != rename.end()) y = f->second;
          mol.atoms.push_back(std::move(at));
        }
      }
      for (std::size_t k = nb; k < e.molecule.atoms.size(); ++k) mol.atoms.push_back(e.molecule.atoms[k]);
      r.add(diagram::canonicalize(mol, e.inputs, e.outputs), coeff);
      std::size_t b = 0;
      while (b < nb && ++pick[b] == choices[b].size()) pick[b++] = 0;
      if (b == nb) break;
    }
  }
  return r;
}

}  // namespace propcalc::wprop
