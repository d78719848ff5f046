#include "propcalc/diagram/signature.hpp"

#include <cctype>
#include <sstream>

namespace propcalc::diagram {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void Signature::add(const std::string& name, int p, int q) {
  if (!is_identifier(name) || name.find('_') != std::string::npos)
    throw DiagramError("bad generator name '" + name + "' (letters and digits only)");
  if (name == "id" || name == "t") throw DiagramError("generator name '" + name + "' is reserved");
  if (p < 0 || q < 0) throw DiagramError("negative arity for generator " + name);
  if (!gens_.emplace(name, Arity{p, q}).second) throw DiagramError("generator " + name + " declared twice");
}

Arity Signature::arity(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw DiagramError("unknown generator " + name);
  return it->second;
}

Signature Signature::parse(std::string_view text) {
  Signature sig;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw, name, colon, arrow;
    int p = -1, q = -1;
    if (!(ls >> kw)) continue;
    const std::string where = "signature line " + std::to_string(lineno) + ": ";
    if (kw != "gen") throw DiagramError(where + "expected 'gen'");
    if (!(ls >> name >> colon >> p >> arrow >> q) || colon != ":" || arrow != "->")
      throw DiagramError(where + "expected 'gen NAME : P -> Q'");
    std::string extra;
    if (ls >> extra) throw DiagramError(where + "trailing text '" + extra + "'");
    try {
      sig.add(name, p, q);
    } catch (const DiagramError& e) {
      throw DiagramError(where + e.what());
    }
  }
  return sig;
}

std::string Signature::to_string() const {
  std::string s;
  for (const auto& [name, a] : gens_) s += "gen " + name + " : " + std::to_string(a.p) + " -> " + std::to_string(a.q) + "\n";
  return s;
}

}  // namespace propcalc::diagram
