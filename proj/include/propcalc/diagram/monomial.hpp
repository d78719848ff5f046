#pragma once

#include <compare>
#include <string>
#include <vector>

#include "propcalc/diagram/molecule.hpp"
#include "propcalc/symgroup/perm.hpp"

namespace propcalc::diagram {

/// A sink or source endpoint. box < 0 means a free port of the diagram, with
/// `index` its position in the input or output ordering; otherwise `index`
/// is a port of that box.
struct Port {
  int box = -1;
  int index = 0;
  bool is_free() const { return box < 0; }
  friend auto operator<=>(const Port&, const Port&) = default;
};

/// Reduced diagram with ordered free ports. Wires run from sources (free
/// inputs, box outputs) to sinks (free outputs, box inputs); the wiring is a
/// bijection between the two. Closed identity loops are only counted.
///
/// A PortGraph is any such diagram; canonical() relabels boxes so that equal
/// values mean equivalent monomials.
struct PortGraph {
  int p = 0;
  int q = 0;
  std::vector<std::string> gens;             // generator of each box
  std::vector<int> arity_in;                 // input count of each box
  std::vector<Port> from_input;              // sink of free input i
  std::vector<std::vector<Port>> from_box;   // sink of output k of box b
  int loops = 0;

  int box_count() const { return static_cast<int>(gens.size()); }
  /// Inverse wiring: source of free output j, and of box input (b,k).
  std::vector<Port> sources_of_outputs() const;
  std::vector<std::vector<Port>> sources_of_boxes() const;

  /// Throws DiagramError unless the wiring is a bijection.
  void check() const;
};

/// Canonical representative; construct through canonical() or canonicalize().
struct CanonMonomial : PortGraph {
  friend bool operator==(const CanonMonomial& a, const CanonMonomial& b);
  friend std::strong_ordering operator<=>(const CanonMonomial& a, const CanonMonomial& b);
};

CanonMonomial canonical(PortGraph g);

/// Reduces a molecule with the given free-variable orderings.
CanonMonomial canonicalize(const Molecule& m, const std::vector<std::string>& input_order,
                           const std::vector<std::string>& output_order, const Signature* sig = nullptr);

/// Expands a monomial back into a molecule with fresh variables. Variables
/// are drawn in a fixed order: free inputs, box outputs, outputs of
/// free-to-free identity wires, loops.
struct Expanded {
  Molecule molecule;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};
Expanded expand(const CanonMonomial& m, VarGen& gen);

/// Printed form with variables v0, v1, ...; loops are printed as id^v_v atoms
/// unless `drop_loops`.
std::string to_string(const CanonMonomial& m, bool drop_loops = false);

CanonMonomial unit_monomial();
CanonMonomial identity_monomial();
CanonMonomial loop_monomial(int count);
/// The wire diagram of σ: input i is joined to output σ(i).
CanonMonomial perm_monomial(const symgroup::Perm& sigma);
/// Inverse of perm_monomial for box-free monomials of type (n,n).
symgroup::Perm as_perm(const CanonMonomial& m);

CanonMonomial tensor(const CanonMonomial& a, const CanonMonomial& b);
/// Joins output j to input i (1-based).
CanonMonomial contract(const CanonMonomial& a, int i, int j);
/// Moves input k to position σ(k) and output k to position τ(k).
CanonMonomial act(const symgroup::Perm& sigma, const symgroup::Perm& tau, const CanonMonomial& a);
/// Full contraction of a (p,q) monomial with a (q,p) monomial.
CanonMonomial pairing(const CanonMonomial& a, const CanonMonomial& b);

}  // namespace propcalc::diagram
