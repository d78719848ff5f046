#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "propcalc/scalars/rat.hpp"

namespace propcalc::scalars {

/// Univariate polynomial in the loop parameter t with rational coefficients.
///
/// coeffs()[k] is the coefficient of t^k. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class PolyT {
public:
  PolyT() = default;
  PolyT(Rat constant);  // NOLINT(google-explicit-constructor)
  PolyT(long constant) : PolyT(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit PolyT(std::vector<Rat> coeffs);

  static PolyT t() { return monomial(Rat(1), 1); }
  static PolyT monomial(const Rat& c, int degree);
  /// Parses the ASCII form, e.g. "t^3 - 3*t^2 + 2*t", "(t-1)*(t+2)", "1/2".
  static PolyT parse(std::string_view text);

  const std::vector<Rat>& coeffs() const { return c_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Rat coeff(int k) const;
  const Rat& leading() const;
  std::size_t term_count() const;

  PolyT monic() const;
  Rat eval(const Rat& x) const;

  PolyT operator-() const;
  PolyT& operator+=(const PolyT& o);
  PolyT& operator-=(const PolyT& o);
  PolyT& operator*=(const PolyT& o);
  PolyT& operator*=(const Rat& c);

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  friend PolyT operator*(PolyT a, const Rat& c) { return a *= c; }
  friend PolyT operator*(const Rat& c, PolyT a) { return a *= c; }
  friend bool operator==(const PolyT& a, const PolyT& b) = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws std::domain_error when the divisor is zero.
std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b);

/// True iff p = d*q for some q in Q[t]. Throws std::domain_error for d = 0.
bool divides(const PolyT& d, const PolyT& p);

/// Exact quotient p/d; throws std::domain_error unless d divides p.
PolyT exact_div(const PolyT& p, const PolyT& d);

/// Monic greatest common divisor. Throws std::domain_error if both are zero.
PolyT gcd(const PolyT& a, const PolyT& b);

/// Returns (g, u, v) with g = u*a + v*b and g the monic gcd.
struct ExtGcd {
  PolyT g, u, v;
};
ExtGcd ext_gcd(const PolyT& a, const PolyT& b);

/// Falling factorial t(t-1)...(t-d).
PolyT falling_factorial(int d);

std::ostream& operator<<(std::ostream& os, const PolyT& p);

}  // namespace propcalc::scalars
