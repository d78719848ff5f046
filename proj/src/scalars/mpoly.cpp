#include "propcalc/scalars/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace propcalc::scalars {

VarRegistry& VarRegistry::instance() {
  static VarRegistry registry;
  return registry;
}

VarId VarRegistry::intern(std::string_view name) {
  const std::string key(name);
  {
    std::shared_lock lock(mu_);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  }
  std::unique_lock lock(mu_);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<VarId>(names_.size());
  names_.push_back(key);
  ids_.emplace(key, id);
  return id;
}

std::string VarRegistry::name(VarId id) const {
  std::shared_lock lock(mu_);
  if (id >= names_.size()) throw std::out_of_range("unknown indeterminate id");
  return names_[id];
}

std::size_t VarRegistry::size() const {
  std::shared_lock lock(mu_);
  return names_.size();
}

MPoly::MPoly(Rat constant) {
  if (!constant.is_zero()) terms_.emplace(MonoKey{}, std::move(constant));
}

MPoly MPoly::variable(VarId id) {
  MPoly p;
  p.terms_.emplace(MonoKey{{id, 1}}, Rat(1));
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rat MPoly::constant_term() const {
  auto it = terms_.find(MonoKey{});
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [v, e] : m) d += static_cast<int>(e);
    best = std::max(best, d);
  }
  return best;
}

void MPoly::add_term(const MonoKey& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat MPoly::eval(const std::function<Rat(VarId)>& point) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (const auto& [v, e] : m) {
      const Rat x = point(v);
      for (std::uint32_t k = 0; k < e; ++k) term *= x;
    }
    acc += term;
  }
  return acc;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

namespace {

MonoKey mono_mul(const MonoKey& a, const MonoKey& b) {
  MonoKey out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& reg = VarRegistry::instance();
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rat mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!mag.is_one() || m.empty()) {
      os << mag;
      need_star = true;
    }
    for (const auto& [v, e] : m) {
      if (need_star) os << '*';
      os << reg.name(v);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace propcalc::scalars
