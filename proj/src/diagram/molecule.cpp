#include "propcalc/diagram/molecule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace propcalc::diagram {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s.push_back(',');
    s += v[k];
  }
  return s;
}

struct Usage {
  std::set<std::string> consumed, produced;
};

Usage usage(const Molecule& m) {
  Usage u;
  for (const auto& a : m.atoms) {
    u.consumed.insert(a.inputs.begin(), a.inputs.end());
    u.produced.insert(a.outputs.begin(), a.outputs.end());
  }
  return u;
}

}  // namespace

std::string Atom::to_string() const {
  if (is_identity()) return "id^" + inputs.at(0) + "_" + outputs.at(0);
  std::string s = gen;
  if (!inputs.empty()) s += "^{" + join(inputs) + "}";
  if (!outputs.empty()) s += "_{" + join(outputs) + "}";
  return s;
}

std::string Molecule::to_string() const {
  std::string s;
  for (const auto& a : atoms) {
    if (!s.empty()) s.push_back(' ');
    s += a.to_string();
  }
  return s;
}

void validate(const Molecule& m, const Signature* sig) {
  std::set<std::string> ins, outs;
  for (const auto& a : m.atoms) {
    if (a.is_identity()) {
      if (a.inputs.size() != 1 || a.outputs.size() != 1) throw DiagramError("identity atom needs one input and one output");
    } else if (sig) {
      const Arity ar = sig->arity(a.gen);
      if (static_cast<int>(a.inputs.size()) != ar.p || static_cast<int>(a.outputs.size()) != ar.q)
        throw DiagramError("arity mismatch: " + a.gen + " takes " + std::to_string(ar.p) + " inputs and " +
                           std::to_string(ar.q) + " outputs");
    }
    std::set<std::string> local;
    for (const auto& x : a.inputs)
      if (!local.insert(x).second) throw DiagramError("repeated input variable " + x + " in atom " + a.to_string());
    local.clear();
    for (const auto& y : a.outputs)
      if (!local.insert(y).second) throw DiagramError("repeated output variable " + y + " in atom " + a.to_string());
    for (const auto& x : a.inputs)
      if (!ins.insert(x).second) throw DiagramError("variable " + x + " used twice as input");
    for (const auto& y : a.outputs)
      if (!outs.insert(y).second) throw DiagramError("variable " + y + " used twice as output");
  }
}

std::vector<std::string> free_inputs(const Molecule& m) {
  const Usage u = usage(m);
  std::vector<std::string> out;
  std::set_difference(u.consumed.begin(), u.consumed.end(), u.produced.begin(), u.produced.end(), std::back_inserter(out));
  return out;
}

std::vector<std::string> free_outputs(const Molecule& m) {
  const Usage u = usage(m);
  std::vector<std::string> out;
  std::set_difference(u.produced.begin(), u.produced.end(), u.consumed.begin(), u.consumed.end(), std::back_inserter(out));
  return out;
}

Molecule product_classes(const std::vector<Molecule>& ms) {
  std::set<std::string> taken, fin, fout;
  for (const auto& m : ms) {
    for (const auto& x : free_inputs(m)) {
      if (!fin.insert(x).second) throw DiagramError("free input " + x + " occurs in two factors");
      taken.insert(x);
    }
    for (const auto& y : free_outputs(m)) {
      if (!fout.insert(y).second) throw DiagramError("free output " + y + " occurs in two factors");
      taken.insert(y);
    }
  }
  Molecule out;
  unsigned long counter = 0;
  auto fresh = [&] {
    std::string s;
    do s = "u" + std::to_string(counter++);
    while (taken.count(s));
    taken.insert(s);
    return s;
  };
  for (const auto& m : ms) {
    const Usage u = usage(m);
    std::map<std::string, std::string> rename;
    for (const auto& x : u.consumed)
      if (u.produced.count(x)) rename.emplace(x, fresh());
    auto r = [&](const std::string& v) {
      auto it = rename.find(v);
      return it == rename.end() ? v : it->second;
    };
    for (Atom a : m.atoms) {
      for (auto& x : a.inputs) x = r(x);
      for (auto& y : a.outputs) y = r(y);
      out.atoms.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace propcalc::diagram
