#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace propcalc::symgroup {

class Partition;

/// Permutation of {1..n}. Stored 0-based; the public constructor and
/// one-line printing are 1-based.
///
/// Composition: (a*b)(i) = a(b(i)), so b acts first. In diagram terms [a][b]
/// stacks the wires of b below those of a.
class Perm {
public:
  Perm() = default;
  /// From 1-based one-line notation, e.g. {3,1,2,4}.
  explicit Perm(const std::vector<int>& one_line);

  static Perm identity(int n);
  /// Product of disjoint or overlapping cycles (1-based), applied right to left.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Perm transposition(int n, int a, int b);
  /// Parses one-line ("3124") or cycle notation ("(1 2)(3 4)", "e") for size n.
  static Perm parse(int n, const std::string& text);
  /// All of Σ_n in lexicographic one-line order.
  static std::vector<Perm> all(int n);

  int size() const { return static_cast<int>(img_.size()); }
  /// 0-based image.
  int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  /// 1-based image.
  int image(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }
  const std::vector<int>& images0() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  int sign() const;
  int cycle_count() const;
  Partition cycle_type() const;

  std::string one_line() const;
  /// Cycle notation with fixed points omitted; "e" for the identity.
  std::string cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    if (a.img_.size() != b.img_.size()) return a.img_.size() <=> b.img_.size();
    return a.img_ <=> b.img_;
  }

private:
  static Perm from0(std::vector<int> img);
  std::vector<int> img_;
};

Perm compose(const Perm& a, const Perm& b);

/// Block sum: a on {1..n}, b shifted onto {n+1..n+m}.
Perm direct_sum(const Perm& a, const Perm& b);

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace propcalc::symgroup
