#include "propcalc/symgroup/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace propcalc::symgroup {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct Memo {
  std::shared_mutex mu;
  std::map<Key, long> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

// Beta set of λ with exactly `len` beads: λ_i + len - i.
std::vector<int> beta_set(const std::vector<int>& parts, std::size_t len) {
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = (i < parts.size() ? parts[i] : 0) + static_cast<int>(len - i - 1);
  return beta;
}

std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  const std::size_t len = beta.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int p = beta[i] - static_cast<int>(len - i - 1);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

// Removing a rim hook of length r moves one bead from b to b - r into a gap;
// the sign is (-1)^(beads jumped over).
long mn(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  Key key{lambda, mu};
  {
    std::shared_lock lock(memo().mu);
    if (auto it = memo().table.find(key); it != memo().table.end()) return it->second;
  }
  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const std::vector<int> beta = beta_set(lambda, lambda.size());
  long total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const int target = beta[k] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[k]) ++jumped;
    std::vector<int> moved = beta;
    moved[k] = target;
    total += (jumped % 2 ? -1 : 1) * mn(from_beta(moved), rest);
  }
  std::unique_lock lock(memo().mu);
  memo().table.emplace(std::move(key), total);
  return total;
}

}  // namespace

scalars::Rat char_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character of " + lambda.to_string() + " at class " + mu.to_string() + ": size mismatch");
  return scalars::Rat(mn(lambda.parts(), mu.parts()));
}

}  // namespace propcalc::symgroup
