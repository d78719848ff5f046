#include "propcalc/scalars/poly_t.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace propcalc::scalars {

PolyT::PolyT(Rat constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

PolyT::PolyT(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyT PolyT::monomial(const Rat& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  PolyT p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
  p.c_.back() = c;
  return p;
}

void PolyT::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat PolyT::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rat& PolyT::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

std::size_t PolyT::term_count() const {
  std::size_t n = 0;
  for (const auto& c : c_) n += c.is_zero() ? 0 : 1;
  return n;
}

PolyT PolyT::monic() const {
  if (is_zero()) return *this;
  PolyT r = *this;
  const Rat inv = Rat(1) / leading();
  for (auto& c : r.c_) c *= inv;
  return r;
}

Rat PolyT::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyT PolyT::operator-() const {
  PolyT r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyT& PolyT::operator+=(const PolyT& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return PolyT();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyT(std::move(out));
}

PolyT& PolyT::operator*=(const PolyT& o) { return *this = *this * o; }

PolyT& PolyT::operator*=(const Rat& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::string PolyT::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rat mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyT& p) { return os << p.to_string(); }

std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {PolyT(), a};
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  const Rat inv = Rat(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rat& lead = rem[static_cast<std::size_t>(k)];
    if (lead.is_zero()) continue;
    const Rat f = lead * inv;
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {PolyT(std::move(quot)), PolyT(std::move(rem))};
}

bool divides(const PolyT& d, const PolyT& p) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  return divmod(p, d).second.is_zero();
}

PolyT exact_div(const PolyT& p, const PolyT& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw std::domain_error("polynomial " + d.to_string() + " does not divide " + p.to_string());
  return q;
}

PolyT gcd(const PolyT& a, const PolyT& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  PolyT x = a, y = b;
  while (!y.is_zero()) {
    PolyT r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const PolyT& a, const PolyT& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  // Invariant: r0 = s0*a + u0*b, r1 = s1*a + u1*b.
  PolyT r0 = a, r1 = b, s0(1), s1, u0, u1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    PolyT s2 = s0 - q * s1;
    PolyT u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  const Rat inv = Rat(1) / r0.leading();
  return {r0 * inv, s0 * inv, u0 * inv};
}

PolyT falling_factorial(int d) {
  PolyT acc(1);
  for (int k = 0; k <= d; ++k) acc *= PolyT::t() - PolyT(Rat(k));
  return acc;
}

// ---------------------------------------------------------------------------
// Parser: sums of products of factors; a factor is a rational literal, t, or a
// parenthesized expression, optionally raised to a nonnegative integer power.

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  PolyT parse_all() {
    PolyT p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at column " +
                                std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyT expr() {
    skip_ws();
    PolyT acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    PolyT first = product();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else break;
    }
    return acc;
  }

  PolyT product() {
    PolyT acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        PolyT d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        acc *= Rat(1) / d.coeff(0);
      } else {
        break;
      }
    }
    return acc;
  }

  PolyT power() {
    PolyT base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      PolyT r(1);
      for (int k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  PolyT atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PolyT inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return PolyT::t();
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return PolyT(Rat::parse(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyT PolyT::parse(std::string_view text) { return PolyParser(text).parse_all(); }

}  // namespace propcalc::scalars
