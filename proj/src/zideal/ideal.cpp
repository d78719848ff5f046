#include "propcalc/zideal/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "propcalc/wprop/z_bridge.hpp"

namespace propcalc::zideal {

namespace {

PolyT linear(int d) { return PolyT::t() + PolyT(scalars::Rat(d)); }

}  // namespace

void IdealData::check() const {
  if (zero) return;
  if (!f.is_monic()) throw std::invalid_argument("ideal polynomial f must be monic, got " + f.to_string());
  for (const Box& b : C)
    if (b.i < 1 || b.j < 1) throw std::invalid_argument("box coordinates must be positive");
}

PolyT g_lambda(const IdealData& ideal, const Partition& lambda) {
  if (ideal.zero) throw std::invalid_argument("g_lambda of the zero ideal");
  PolyT g = ideal.f;
  for (const Box& b : ideal.C)
    if (!lambda.contains(b)) g *= linear(b.diagonal());
  return g;
}

struct CompatFamily::State {
  Rule rule;
  std::shared_mutex mu;
  std::map<Partition, PolyT> memo;
};

CompatFamily::CompatFamily(Rule rule) : state_(std::make_shared<State>()) { state_->rule = std::move(rule); }

CompatFamily CompatFamily::of(const IdealData& ideal) {
  if (ideal.zero) return zero();
  ideal.check();
  return CompatFamily([ideal](const Partition& l) { return g_lambda(ideal, l); });
}

CompatFamily CompatFamily::zero() {
  return CompatFamily([](const Partition&) { return PolyT(); });
}

PolyT CompatFamily::g(const Partition& lambda) const {
  {
    std::shared_lock lock(state_->mu);
    if (auto it = state_->memo.find(lambda); it != state_->memo.end()) return it->second;
  }
  PolyT v = state_->rule(lambda);
  std::unique_lock lock(state_->mu);
  state_->memo.emplace(lambda, v);
  return v;
}

std::string compatibility_violation(const CompatFamily& F, int bound) {
  for (int n = 1; n <= bound; ++n)
    for (const Partition& lambda : Partition::all(n)) {
      const PolyT gl = F.g(lambda);
      for (const auto& [mu, box] : symgroup::branch(lambda, symgroup::BranchDir::remove)) {
        const PolyT gm = F.g(mu);
        if (gm == gl || gm == gl * linear(box.diagonal())) continue;
        return "g" + mu.to_string() + " = " + gm.to_string() + " is neither g" + lambda.to_string() + " = " +
               gl.to_string() + " nor its product with (t + " + std::to_string(box.diagonal()) + ")";
      }
    }
  return {};
}

CompatFamily principal_ideal(const Partition& lambda, const PolyT& h) {
  if (h.is_zero()) throw std::invalid_argument("principal ideal of the zero polynomial");
  const PolyT base = h.monic();
  return CompatFamily([lambda, base](const Partition& nu) {
    PolyT g = base;
    for (const Box& b : lambda.boxes())
      if (!nu.contains(b)) g *= linear(b.diagonal());
    return g;
  });
}

namespace {

PolyT gcd0(const PolyT& a, const PolyT& b) {
  if (a.is_zero() && b.is_zero()) return PolyT();
  return scalars::gcd(a, b);
}

}  // namespace

CompatFamily ideal_sum(const CompatFamily& A, const CompatFamily& B, int bound) {
  CompatFamily S([A, B](const Partition& l) { return gcd0(A.g(l), B.g(l)); });
  if (auto err = compatibility_violation(S, bound); !err.empty()) throw std::logic_error("ideal sum is not compatible: " + err);
  return S;
}

CompatFamily generate(const std::vector<GAElt>& elements, int bound) {
  CompatFamily acc = CompatFamily::zero();
  for (const GAElt& z : elements) {
    if (z.is_zero()) continue;
    for (const Partition& lambda : Partition::all(z.n())) {
      const PolyT h = symgroup::component_content(z, lambda);
      if (!h.is_zero()) acc = ideal_sum(acc, principal_ideal(lambda, h), bound);
    }
  }
  return acc;
}

IdealData normal_form(const CompatFamily& F, int n) {
  const PolyT f = F.g(Partition::rectangle(n, n));
  if (f.is_zero()) return IdealData::zero_ideal();
  IdealData out;
  out.f = f;
  PolyT expected = f;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Partition corner = Partition::rectangle(i, j);
      if (F.g(corner) != F.g(corner.without({i, j}))) {
        out.C.insert({i, j});
        expected *= linear(j - i);
      }
    }
  const PolyT g0 = F.g(Partition());
  if (g0 != expected)
    throw std::domain_error("jumps escape the " + std::to_string(n) + "x" + std::to_string(n) + " rectangle: g() = " +
                            g0.to_string() + " but f times the jump factors is " + expected.to_string());
  for (int k = 0; k <= n * n; ++k)
    for (const Partition& lambda : Partition::all(k)) {
      if (lambda.length() > n || lambda.row(1) > n) continue;
      if (g_lambda(out, lambda) != F.g(lambda))
        throw std::domain_error("family is not determined by its rectangle jumps at " + lambda.to_string());
    }
  return out;
}

bool member(const IdealData& ideal, const GAElt& z) {
  if (z.is_zero()) return true;
  if (ideal.zero) return false;
  for (const Partition& lambda : Partition::all(z.n())) {
    const PolyT h = symgroup::component_content(z, lambda);
    if (h.is_zero()) continue;
    if (!scalars::divides(g_lambda(ideal, lambda), h)) return false;
  }
  return true;
}

bool member(const IdealData& ideal, const wprop::PropElt& z) {
  if (z.is_zero()) return true;
  if (z.p() != z.q()) return false;
  return member(ideal, wprop::z_to_group_algebra(z));
}

IdealClass classify(const IdealData& ideal) {
  if (ideal.zero) return IdealClass::prime_not_maximal;
  ideal.check();
  if (ideal.f.degree() == 1 && ideal.C.empty()) {
    const scalars::Rat a = -ideal.f.coeff(0);
    return a.is_integer() ? IdealClass::prime_not_maximal : IdealClass::maximal;
  }
  if (ideal.f.is_one() && ideal.C.size() == 1) return IdealClass::maximal;
  return IdealClass::not_prime;
}

std::string to_string(IdealClass c) {
  switch (c) {
    case IdealClass::not_prime: return "not_prime";
    case IdealClass::prime_not_maximal: return "prime_not_maximal";
    case IdealClass::maximal: return "maximal";
  }
  return "?";
}

std::string picture(const IdealData& ideal) {
  if (ideal.zero) return "(zero ideal)\n";
  int rows = 0, cols = 0;
  for (const Box& b : ideal.C) {
    rows = std::max(rows, b.i);
    cols = std::max(cols, b.j);
  }
  if (rows == 0) return "(no boxes)\n";
  std::string s;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) s += ideal.C.count({i, j}) ? "■" : "□";
    s += "\n";
  }
  return s;
}

}  // namespace propcalc::zideal
