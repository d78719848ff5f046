#pragma once

#include <string>
#include <vector>

#include "propcalc/diagram/signature.hpp"

namespace propcalc::diagram {

/// A generator atom A^{x1..xp}_{y1..yq}, or an identity atom id^x_y when gen
/// is empty. Superscripts are inputs, subscripts outputs.
struct Atom {
  std::string gen;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  static Atom identity(std::string x, std::string y) { return {"", {std::move(x)}, {std::move(y)}}; }
  bool is_identity() const { return gen.empty(); }
  std::string to_string() const;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Unordered collection of atoms; a variable appears at most once as an
/// input and at most once as an output.
struct Molecule {
  std::vector<Atom> atoms;
  std::string to_string() const;
};

/// Fresh variable names prefix0, prefix1, ...; one generator per use site.
class VarGen {
public:
  explicit VarGen(std::string prefix = "v") : prefix_(std::move(prefix)) {}
  std::string next() { return prefix_ + std::to_string(count_++); }

private:
  std::string prefix_;
  unsigned long count_ = 0;
};

/// Checks atom shapes (arity, distinct ports) and the one-input/one-output
/// rule across atoms. `sig` may be null to skip arity checks.
void validate(const Molecule& m, const Signature* sig);

/// Free inputs (consumed, never produced) and free outputs, sorted by name.
std::vector<std::string> free_inputs(const Molecule& m);
std::vector<std::string> free_outputs(const Molecule& m);

/// Disjoint union after renaming bound variables apart. Throws if two
/// factors share a free input or a free output.
Molecule product_classes(const std::vector<Molecule>& ms);

}  // namespace propcalc::diagram
