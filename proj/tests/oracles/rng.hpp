#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "propcalc/scalars/poly_t.hpp"
#include "propcalc/scalars/rat.hpp"

namespace oracle {

// Fixed-seed generator shared by the property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  propcalc::scalars::Rat rat(int num_bound = 5, int den_bound = 3) {
    return propcalc::scalars::Rat(uniform(-num_bound, num_bound), uniform(1, den_bound));
  }
  propcalc::scalars::Rat nonzero_rat(int num_bound = 5, int den_bound = 3) {
    for (;;) {
      auto r = rat(num_bound, den_bound);
      if (!r.is_zero()) return r;
    }
  }

  propcalc::scalars::PolyT poly(int max_degree) {
    propcalc::scalars::PolyT p;
    for (int k = 0; k <= max_degree; ++k) p += propcalc::scalars::PolyT::monomial(rat(3, 2), k);
    return p;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), gen_);
  }

  std::mt19937_64& engine() { return gen_; }

private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
