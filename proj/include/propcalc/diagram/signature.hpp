#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace propcalc::diagram {

/// Thrown for malformed diagrams, signatures and expressions.
class DiagramError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Arity {
  int p = 0;  // inputs
  int q = 0;  // outputs
  friend bool operator==(const Arity&, const Arity&) = default;
};

/// Generator names with their (inputs, outputs) arity.
class Signature {
public:
  Signature() = default;

  /// Parses lines "gen A : 2 -> 1"; blank lines and '#' comments are skipped.
  static Signature parse(std::string_view text);

  void add(const std::string& name, int p, int q);
  bool has(const std::string& name) const { return gens_.count(name) != 0; }
  Arity arity(const std::string& name) const;
  bool empty() const { return gens_.empty(); }
  const std::map<std::string, Arity>& gens() const { return gens_; }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  std::map<std::string, Arity> gens_;
};

/// True for names usable as generators or variables: [a-zA-Z][a-zA-Z0-9_]*.
bool is_identifier(std::string_view s);

}  // namespace propcalc::diagram
