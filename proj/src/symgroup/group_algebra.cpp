#include "propcalc/symgroup/group_algebra.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>

#include "propcalc/symgroup/characters.hpp"

namespace propcalc::symgroup {

using scalars::Rat;

GAElt::GAElt(const Perm& p, PolyT coeff) : n_(p.size()) {
  if (!coeff.is_zero()) terms_.emplace(p, std::move(coeff));
}

void GAElt::check_size(int n) const {
  if (n != n_)
    throw std::invalid_argument("group algebra elements of degrees " + std::to_string(n_) + " and " +
                                std::to_string(n) + " do not mix");
}

PolyT GAElt::coefficient(const Perm& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? PolyT() : it->second;
}

void GAElt::add(const Perm& p, const PolyT& c) {
  check_size(p.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyT GAElt::content() const {
  PolyT g;
  for (const auto& [p, c] : terms_) g = g.is_zero() ? c.monic() : scalars::gcd(g, c);
  return g;
}

GAElt GAElt::specialize(const Rat& value) const {
  GAElt r(n_);
  for (const auto& [p, c] : terms_) r.add(p, PolyT(c.eval(value)));
  return r;
}

GAElt GAElt::operator-() const {
  GAElt r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

GAElt& GAElt::operator+=(const GAElt& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && n_ != o.n_) n_ = o.n_;
  check_size(o.n_);
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GAElt& GAElt::operator-=(const GAElt& o) { return *this += -o; }

GAElt& GAElt::operator*=(const PolyT& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, x] : terms_) x *= c;
  return *this;
}

GAElt operator*(const GAElt& a, const GAElt& b) {
  a.check_size(b.n_);
  GAElt r(a.n_);
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) r.add(pa * pb, ca * cb);
  return r;
}

namespace {

std::string compact(const PolyT& p) {
  std::string s;
  for (char c : p.to_string())
    if (c != ' ') s.push_back(c);
  return s;
}

}  // namespace

std::string GAElt::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    const std::string basis = "[" + p.cycles() + "]";
    bool negative = false;
    std::string coeff;
    if (c.term_count() == 1) {
      negative = c.leading().sign() < 0;
      const PolyT mag = negative ? -c : c;
      if (!mag.is_one()) coeff = compact(mag) + "*";
    } else {
      coeff = "(" + compact(c) + ")*";
    }
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    s += coeff + basis;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const GAElt& g) { return os << g.to_string(); }

GAElt central_idempotent(const Partition& lambda) {
  static std::shared_mutex mu;
  static std::map<Partition, GAElt> cache;
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  const int n = lambda.size();
  const Rat scale = Rat(lambda.dimension()) / scalars::factorial(n);
  GAElt e(n);
  for (const Perm& s : Perm::all(n)) {
    const Rat chi = char_value(lambda, s.inverse().cycle_type());
    if (!chi.is_zero()) e.add(s, PolyT(scale * chi));
  }
  std::unique_lock lock(mu);
  cache.emplace(lambda, e);
  return e;
}

GAElt young_symmetrizer(const Tableau& tab) {
  const int n = tab.size();
  GAElt y(n);
  const auto rows = tab.row_group();
  for (const Perm& mu : tab.column_group())
    for (const Perm& sigma : rows) y.add(mu * sigma, PolyT(mu.sign()));
  return y;
}

GAElt alternator(int n) {
  GAElt a(n);
  for (const Perm& s : Perm::all(n)) a.add(s, PolyT(s.sign()));
  return a;
}

GAElt bimodule_component(const GAElt& z, const Partition& lambda) {
  if (z.is_zero()) return GAElt(lambda.size());
  if (lambda.size() != z.n()) throw std::invalid_argument("partition " + lambda.to_string() + " does not match degree " + std::to_string(z.n()));
  return central_idempotent(lambda) * z;
}

PolyT component_content(const GAElt& z, const Partition& lambda) { return bimodule_component(z, lambda).content(); }

}  // namespace propcalc::symgroup
