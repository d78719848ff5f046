#include "propcalc/teval/tensor.hpp"

namespace propcalc::teval {

RatTensor perm_tensor(const symgroup::Perm& sigma, int dim) {
  const int n = sigma.size();
  RatTensor t(dim, n, n);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  if (dim == 0) return n == 0 ? RatTensor::scalar(0, scalars::Rat(1)) : t;
  for (;;) {
    RatTensor::Key k(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      k[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
      k[static_cast<std::size_t>(n + sigma[i])] = idx[static_cast<std::size_t>(i)];
    }
    t.add(k, scalars::Rat(1));
    int pos = 0;
    while (pos < n && ++idx[static_cast<std::size_t>(pos)] == dim) idx[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return t;
}

RatTensor specialize(const PolyTensor& t, const std::function<scalars::Rat(scalars::VarId)>& point) {
  RatTensor r(t.dim(), t.p(), t.q());
  for (const auto& [k, v] : t.entries()) r.add(k, v.eval(point));
  return r;
}

PolyTensor to_poly(const RatTensor& t) {
  PolyTensor r(t.dim(), t.p(), t.q());
  for (const auto& [k, v] : t.entries()) r.add(k, scalars::MPoly(v));
  return r;
}

}  // namespace propcalc::teval
