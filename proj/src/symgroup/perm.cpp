#include "propcalc/symgroup/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "propcalc/symgroup/partition.hpp"

namespace propcalc::symgroup {

Perm::Perm(const std::vector<int>& one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(one_line.size(), false);
  img_.reserve(one_line.size());
  for (int v : one_line) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
    img_.push_back(v - 1);
  }
}

Perm Perm::from0(std::vector<int> img) {
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return from0(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm acc = identity(n);
  for (const auto& cyc : cycles) {
    Perm c = identity(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)])
        throw std::invalid_argument("bad cycle entry " + std::to_string(a));
      used[static_cast<std::size_t>(a - 1)] = true;
      c.img_[static_cast<std::size_t>(a - 1)] = b - 1;
    }
    acc = acc * c;
  }
  return acc;
}

Perm Perm::transposition(int n, int a, int b) { return from_cycles(n, {{a, b}}); }

Perm Perm::parse(int n, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !s.empty()) s.push_back(c);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty() || s == "e" || s == "()") return identity(n);
  if (s.front() != '(') {
    std::vector<int> line;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad one-line permutation '" + text + "'");
      line.push_back(c - '0');
    }
    if (static_cast<int>(line.size()) != n) throw std::invalid_argument("permutation '" + text + "' has wrong size");
    return Perm(line);
  }
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("bad cycle notation '" + text + "'");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unclosed cycle in '" + text + "'");
    std::istringstream in(s.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      for (auto& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream sub(tok);
      int v;
      while (sub >> v) cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(cyc);
    pos = close + 1;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  return from_cycles(n, cycles);
}

std::vector<Perm> Perm::all(int n) {
  std::vector<Perm> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  do out.push_back(from0(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return from0(std::move(inv));
}

int Perm::sign() const { return (size() - cycle_count()) % 2 == 0 ? 1 : -1; }

int Perm::cycle_count() const {
  std::vector<bool> seen(img_.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(img_[k])) seen[k] = true;
  }
  return cycles;
}

Partition Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(img_[k])) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

std::string Perm::one_line() const {
  std::string s;
  for (int v : img_) {
    if (img_.size() > 9 && !s.empty()) s.push_back(' ');
    s += std::to_string(v + 1);
  }
  return s;
}

std::string Perm::cycles() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    s.push_back('(');
    bool first = true;
    for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(img_[k])) {
      seen[k] = true;
      if (!first) s.push_back(' ');
      first = false;
      s += std::to_string(k + 1);
    }
    s.push_back(')');
  }
  return s.empty() ? "e" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("composing permutations of sizes " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
  std::vector<int> img(a.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
  return Perm::from0(std::move(img));
}

Perm compose(const Perm& a, const Perm& b) { return a * b; }

Perm direct_sum(const Perm& a, const Perm& b) {
  std::vector<int> line;
  for (int i = 1; i <= a.size(); ++i) line.push_back(a.image(i));
  for (int i = 1; i <= b.size(); ++i) line.push_back(b.image(i) + a.size());
  return Perm(line);
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.cycles(); }

}  // namespace propcalc::symgroup
