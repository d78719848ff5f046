#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "propcalc/scalars/rat.hpp"

namespace propcalc::scalars {

using VarId = std::uint32_t;

/// Process-wide interning of indeterminate names. Ids are stable for the life
/// of the process, so printed polynomials are reproducible. Thread-safe.
class VarRegistry {
public:
  static VarRegistry& instance();
  VarId intern(std::string_view name);
  std::string name(VarId id) const;
  std::size_t size() const;

private:
  VarRegistry() = default;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, VarId> ids_;
  std::vector<std::string> names_;
};

/// A monomial in the indeterminates: sorted (variable, exponent) pairs,
/// exponents positive.
using MonoKey = std::vector<std::pair<VarId, std::uint32_t>>;

/// Sparse multivariate polynomial with rational coefficients.
class MPoly {
public:
  MPoly() = default;
  MPoly(Rat constant);  // NOLINT(google-explicit-constructor)
  MPoly(long constant) : MPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(VarId id);
  static MPoly variable(std::string_view name) { return variable(VarRegistry::instance().intern(name)); }

  const std::map<MonoKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  int total_degree() const;

  Rat eval(const std::function<Rat(VarId)>& point) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  std::string to_string() const;

private:
  void add_term(const MonoKey& m, const Rat& c);
  std::map<MonoKey, Rat> terms_;
};

}  // namespace propcalc::scalars
