#include "propcalc/symgroup/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace propcalc::symgroup {

std::ostream& operator<<(std::ostream& os, const Box& b) { return os << '(' << b.i << ',' << b.j << ')'; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  int cur = -1;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else {
      if (cur >= 0) parts.push_back(cur);
      cur = -1;
      if (c != ',' && c != '(' && c != ')' && c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c)) &&
          !(static_cast<unsigned char>(c) & 0x80))
        throw std::invalid_argument("cannot parse partition '" + text + "'");
    }
  }
  if (cur >= 0) parts.push_back(cur);
  return Partition(parts);
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

std::vector<Partition> Partition::all(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.row(i) > row(i)) return false;
  return true;
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<Box> Partition::removable() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    if (row(i) > row(i + 1)) out.push_back({i, row(i)});
  return out;
}

std::vector<Box> Partition::addable() const {
  std::vector<Box> out;
  for (int i = 1; i <= length() + 1; ++i)
    if (i == 1 || row(i - 1) > row(i)) out.push_back({i, row(i) + 1});
  return out;
}

Partition Partition::without(const Box& b) const {
  if (b.i < 1 || b.i > length() || row(b.i) != b.j || row(b.i + 1) >= b.j)
    throw std::invalid_argument("box is not removable");
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(b.i - 1)];
  return Partition(p);
}

Partition Partition::with(const Box& b) const {
  if (b.j != row(b.i) + 1 || (b.i > 1 && row(b.i - 1) < b.j) || b.i > length() + 1)
    throw std::invalid_argument("box is not addable");
  std::vector<int> p = parts_;
  if (b.i == length() + 1) p.push_back(1);
  else ++p[static_cast<std::size_t>(b.i - 1)];
  return Partition(p);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= row(1); ++j) {
    int len = 0;
    while (row(len + 1) >= j) ++len;
    c.push_back(len);
  }
  return Partition(c);
}

long Partition::dimension() const {
  // n! / prod hooks, accumulated so that intermediate values stay integral
  const Partition conj = conjugate();
  long num = 1, den = 1;
  int k = 0;
  for (const Box& b : boxes()) {
    num *= ++k;
    den *= (row(b.i) - b.j) + (conj.row(b.j) - b.i) + 1;
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s.push_back(',');
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

std::vector<std::pair<Partition, Box>> branch(const Partition& lambda, BranchDir dir) {
  std::vector<std::pair<Partition, Box>> out;
  if (dir == BranchDir::remove) {
    for (const Box& b : lambda.removable()) out.emplace_back(lambda.without(b), b);
  } else {
    for (const Box& b : lambda.addable()) out.emplace_back(lambda.with(b), b);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

}  // namespace propcalc::symgroup
