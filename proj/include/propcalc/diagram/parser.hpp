#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "propcalc/diagram/molecule.hpp"
#include "propcalc/diagram/signature.hpp"
#include "propcalc/scalars/poly_t.hpp"

namespace propcalc::diagram {

/// Parse failure; `column` is 1-based into the source text.
class ParseError : public DiagramError {
public:
  ParseError(std::size_t column, const std::string& what)
      : DiagramError("column " + std::to_string(column) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

/// One summand: coefficient times a molecule with explicit free orderings.
struct ParsedTerm {
  scalars::PolyT coeff;
  Molecule molecule;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// Parses a linear combination of diagrams. Grammar:
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := [coeff ['*']] atom* [order]       (at least one part)
///   coeff    := factor ('*' factor)*
///   factor   := rational | 't' ['^' int] | '(' polynomial in t ')'
///   atom     := NAME ['^' vars] ['_' vars] | 'id' '^' var '_' var
///   vars     := var | '{' [var (',' var)*] '}'
///   order    := '[' [var (',' var)*] ';' [var (',' var)*] ']'
///
/// Without an order the free variables are ordered by name. The coefficient
/// t is accepted only when the signature is empty. Every term is validated
/// (known generators, arity, one producer and one consumer per variable,
/// orderings listing exactly the free variables); errors carry the column.
std::vector<ParsedTerm> parse_expression(std::string_view src, const Signature& sig);

}  // namespace propcalc::diagram
