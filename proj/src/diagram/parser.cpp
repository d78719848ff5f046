#include "propcalc/diagram/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace propcalc::diagram {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
public:
  Parser(std::string_view src, const Signature& sig) : s_(src), sig_(sig) {}

  std::vector<ParsedTerm> expression() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    terms.push_back(term(negate));
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (accept('+')) terms.push_back(term(false));
      else if (accept('-')) terms.push_back(term(true));
      else fail(pos_, std::string("unexpected '") + s_[pos_] + "'");
    }
    return terms;
  }

private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const { throw ParseError(at + 1, what); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(pos_, std::string("expected '") + c + "'");
  }

  // Underscores are allowed only where '_' cannot start a subscript.
  std::string identifier(bool underscore = true) {
    skip_ws();
    if (!ident_start(peek())) fail(pos_, "expected a variable name");
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || (underscore && s_[pos_] == '_'))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  bool at_factor() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    return c == 't' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]));
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_, "expected an integer");
    return start;
  }

  scalars::PolyT factor() {
    skip_ws();
    const std::size_t start = pos_;
    scalars::PolyT value;
    if (peek() == '(') {
      int depth = 0;
      std::size_t k = pos_;
      for (; k < s_.size(); ++k) {
        if (s_[k] == '(') ++depth;
        if (s_[k] == ')' && --depth == 0) break;
      }
      if (k >= s_.size()) fail(start, "unbalanced parenthesis");
      try {
        value = scalars::PolyT::parse(s_.substr(pos_ + 1, k - pos_ - 1));
      } catch (const std::exception& e) {
        fail(start, e.what());
      }
      pos_ = k + 1;
    } else if (peek() == 't') {
      ++pos_;
      int e = 1;
      if (accept('^')) {
        const std::size_t d = integer();
        e = std::stoi(std::string(s_.substr(d, pos_ - d)));
      }
      value = scalars::PolyT::monomial(scalars::Rat(1), e);
    } else {
      const std::size_t d = integer();
      std::string lit(s_.substr(d, pos_ - d));
      if (peek() == '/') {
        ++pos_;
        const std::size_t d2 = integer();
        lit += "/" + std::string(s_.substr(d2, pos_ - d2));
      }
      try {
        value = scalars::PolyT(scalars::Rat::parse(lit));
      } catch (const std::exception& e) {
        fail(start, e.what());
      }
    }
    if (!value.is_constant() && !sig_.empty()) fail(start, "t is only allowed over the empty signature");
    return value;
  }

  std::vector<std::string> vars() {
    std::vector<std::string> out;
    if (peek() == '{') {
      ++pos_;
      skip_ws();
      if (accept('}')) return out;
      out.push_back(identifier());
      while (accept(',')) out.push_back(identifier());
      expect('}');
      return out;
    }
    out.push_back(identifier(false));
    return out;
  }

  Atom atom(std::map<std::string, std::size_t>& used_in, std::map<std::string, std::size_t>& used_out) {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = identifier(false);
    Atom a;
    std::vector<std::string> ins, outs;
    bool have_in = false, have_out = false;
    while (peek() == '^' || peek() == '_') {
      const char c = s_[pos_++];
      if ((c == '^' && have_in) || (c == '_' && have_out)) fail(pos_ - 1, std::string("duplicate '") + c + "' in atom");
      (c == '^' ? ins : outs) = vars();
      (c == '^' ? have_in : have_out) = true;
    }
    if (name == "id") {
      if (ins.size() != 1 || outs.size() != 1) fail(start, "identity atom needs the form id^x_y");
      a = Atom::identity(ins[0], outs[0]);
    } else if (name == "t") {
      fail(start, "'t' is a coefficient, not a generator");
    } else {
      if (!sig_.has(name)) fail(start, "unknown generator " + name);
      const Arity ar = sig_.arity(name);
      if (static_cast<int>(ins.size()) != ar.p || static_cast<int>(outs.size()) != ar.q)
        fail(start, "arity mismatch: " + name + " takes " + std::to_string(ar.p) + " inputs and " + std::to_string(ar.q) +
                        " outputs, got " + std::to_string(ins.size()) + " and " + std::to_string(outs.size()));
      a.gen = name;
      a.inputs = ins;
      a.outputs = outs;
    }
    std::set<std::string> local;
    for (const auto& x : a.inputs)
      if (!local.insert(x).second) fail(start, "repeated input variable " + x + " in atom " + a.to_string());
    local.clear();
    for (const auto& y : a.outputs)
      if (!local.insert(y).second) fail(start, "repeated output variable " + y + " in atom " + a.to_string());
    for (const auto& x : a.inputs)
      if (!used_in.emplace(x, start).second) fail(start, "variable " + x + " used twice as input");
    for (const auto& y : a.outputs)
      if (!used_out.emplace(y, start).second) fail(start, "variable " + y + " used twice as output");
    return a;
  }

  std::vector<std::string> order_list() {
    std::vector<std::string> out;
    skip_ws();
    if (peek() == ';' || peek() == ']') return out;
    out.push_back(identifier());
    while (accept(',')) out.push_back(identifier());
    return out;
  }

  ParsedTerm term(bool negate) {
    skip_ws();
    const std::size_t start = pos_;
    ParsedTerm t;
    t.coeff = scalars::PolyT(negate ? -1 : 1);
    bool any = false;
    while (at_factor()) {
      t.coeff *= factor();
      any = true;
      if (!accept('*')) break;
    }
    std::map<std::string, std::size_t> used_in, used_out;
    while (true) {
      skip_ws();
      if (!ident_start(peek()) || at_factor()) break;
      t.molecule.atoms.push_back(atom(used_in, used_out));
      any = true;
    }
    const auto fin = free_inputs(t.molecule), fout = free_outputs(t.molecule);
    skip_ws();
    if (peek() == '[') {
      const std::size_t at = pos_++;
      t.inputs = order_list();
      expect(';');
      t.outputs = order_list();
      expect(']');
      auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      if (sorted(t.inputs) != fin || sorted(t.outputs) != fout) {
        auto show = [](const std::vector<std::string>& v) {
          std::string s;
          for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
          return "{" + s + "}";
        };
        fail(at, "ordering mismatch: free inputs are " + show(fin) + " and free outputs are " + show(fout));
      }
      any = true;
    } else {
      t.inputs = fin;
      t.outputs = fout;
    }
    if (!any) fail(start, "expected a term");
    return t;
  }

  std::string_view s_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_expression(std::string_view src, const Signature& sig) {
  return Parser(src, sig).expression();
}

}  // namespace propcalc::diagram
