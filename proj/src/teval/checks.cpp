#include "propcalc/teval/checks.hpp"

#include <stdexcept>

#include "propcalc/scalars/linalg.hpp"

namespace propcalc::teval {

using diagram::CanonMonomial;
using diagram::Signature;
using scalars::Rat;
using symgroup::Perm;
using wprop::PropElt;

namespace {

void set_bracket(RatTensor& L, int a, int b, int c, long v) {
  L.set({a, b, c}, Rat(v));
  L.set({b, a, c}, Rat(-v));
}

}  // namespace

std::vector<std::string> lie_algebra_names() { return {"sl2", "so3", "nonabelian2", "abelian3"}; }

RatTensor lie_structure(const std::string& name) {
  if (name == "sl2") {
    // e = 0, h = 1, f = 2
    RatTensor L(3, 2, 1);
    set_bracket(L, 1, 0, 0, 2);
    set_bracket(L, 1, 2, 2, -2);
    set_bracket(L, 0, 2, 1, 1);
    return L;
  }
  if (name == "so3") {
    RatTensor L(3, 2, 1);
    set_bracket(L, 0, 1, 2, 1);
    set_bracket(L, 1, 2, 0, 1);
    set_bracket(L, 2, 0, 1, 1);
    return L;
  }
  if (name == "nonabelian2") {
    RatTensor L(2, 2, 1);
    set_bracket(L, 0, 1, 1, 1);
    return L;
  }
  if (name == "abelian3") return RatTensor(3, 2, 1);
  throw std::invalid_argument("unknown Lie algebra '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> lie_diagrams() {
  return {
      {"antisymmetry", "L^{a,b}_c + L^{b,a}_c"},
      {"jacobi", "L^{a,d}_e L^{b,c}_d + L^{b,d}_e L^{c,a}_d + L^{c,d}_e L^{a,b}_d"},
      {"killing", "L^{a,c}_d L^{b,d}_c - K^{a,b}"},
      {"casimir", "L^{a,c}_d L^{b,d}_c C_{b,e} - id^a_e"},
      {"lowered", "L^{a,b}_c K^{c,d} [a,b,d;]"},
  };
}

LieReport check_lie(int n, const RatTensor& L) {
  if (L.p() != 2 || L.q() != 1) throw std::invalid_argument("structure tensor must have type (2,1)");
  if (L.dim() != n) throw std::invalid_argument("structure tensor has dimension " + std::to_string(L.dim()));
  const auto ds = lie_diagrams();
  Signature sig;
  sig.add("L", 2, 1);
  sig.add("K", 2, 0);
  sig.add("C", 0, 2);

  // tr(ad_a ad_b) from the matrices (ad_a)_{c,d} = L^{a,d}_c
  std::vector<std::vector<Rat>> kappa(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  for (const auto& [k1, v1] : L.entries())
    for (const auto& [k2, v2] : L.entries())
      if (k1[1] == k2[2] && k2[1] == k1[2]) kappa[static_cast<std::size_t>(k1[0])][static_cast<std::size_t>(k2[0])] += v1 * v2;
  const auto inv = scalars::inverse(kappa);

  RatRep rep;
  rep.sig = sig;
  rep.dim = n;
  RatTensor K(n, 2, 0), C(n, 0, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      K.set({a, b}, kappa[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      if (!inv.empty()) C.set({a, b}, inv[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    }
  rep.tensors = {{"L", L}, {"K", K}, {"C", C}};
  rep.check();
  auto vanishes = [&](const PropElt& x) { return eval(rep, x).is_zero(); };
  auto parse = [&](const std::string& s) { return PropElt::parse(s, sig); };

  LieReport r;
  r.antisymmetric = vanishes(parse(ds[0].second));
  r.jacobi = vanishes(parse(ds[1].second));
  r.killing_ok = vanishes(parse(ds[2].second));
  r.killing = eval(rep, parse("L^{a,c}_d L^{b,d}_c"));
  r.nondegenerate = !inv.empty();
  if (r.nondegenerate) {
    r.casimir_ok = vanishes(parse(ds[3].second)) && vanishes(parse("K^{a,b} C_{b,e} - id^a_e"));
    const PropElt low = parse(ds[4].second);
    const Perm e0 = Perm::identity(0);
    r.lowered_alternating = vanishes(low + wprop::act(Perm::transposition(3, 1, 2), e0, low)) &&
                            vanishes(low + wprop::act(Perm::transposition(3, 2, 3), e0, low));
  }
  return r;
}

PropElt lift(const PropElt& a, const Signature& sig) {
  PropElt r(sig, a.p(), a.q());
  for (const auto& [m, c] : a.terms()) r.add(m, c);
  return r;
}

PropElt cayley_hamilton_element(int n) {
  if (n < 1) throw std::invalid_argument("Cayley-Hamilton degree must be positive");
  Signature sig;
  sig.add("A", 1, 1);
  const PropElt a = PropElt::parse("A^x_y", sig);
  PropElt x = lift(wprop::alt(n + 1), sig);
  for (int k = 0; k < n; ++k) x = wprop::tensor(x, a);
  // Strand k of alt runs out into the k-th copy of A and back in.
  for (int k = 1; k <= n; ++k) {
    x = wprop::contract(x, n + 3 - k, 1);
    x = wprop::contract(x, 1, n + 2 - k);
  }
  return x;
}

bool check_cayley_hamilton(int n, const RatTensor& A) {
  if (A.p() != 1 || A.q() != 1) throw std::invalid_argument("matrix tensor must have type (1,1)");
  const PropElt x = cayley_hamilton_element(n);
  RatRep rep;
  rep.sig = x.sig();
  rep.dim = A.dim();
  rep.tensors = {{"A", A}};
  return eval(rep, x).is_zero();
}

std::vector<RatTensor> invariant_span_gl(int p, int q, int n) {
  std::vector<RatTensor> out;
  if (p != q) return out;
  for (const Perm& s : Perm::all(p)) out.push_back(perm_tensor(s, n));
  return out;
}

std::size_t gram_rank(const std::vector<RatTensor>& as, const std::vector<RatTensor>& bs) {
  if (as.empty() || bs.empty()) return 0;
  std::vector<std::vector<Rat>> m;
  for (const auto& a : as) {
    std::vector<Rat> row;
    for (const auto& b : bs) row.push_back(pairing(a, b));
    m.push_back(std::move(row));
  }
  return scalars::rank(m);
}

AnnihilationReport annihilation_test(const ClosedFunctional& f, const Signature& sig, int d, int probe_bound) {
  if (d < 0 || probe_bound < 0) throw std::invalid_argument("negative level or probe bound");
  AnnihilationReport r;
  r.unital = f(diagram::unit_monomial()) == Rat(1);
  if (!r.unital) r.detail = "f(1) != 1";

  MonomialBounds bounds;
  for (const auto& [name, ar] : sig.gens()) bounds.per_gen[name] = probe_bound;
  bounds.total = probe_bound;
  bounds.max_loops = 1;
  const auto closed = enumerate_monomials(sig, 0, 0, bounds);
  r.multiplicative = true;
  for (std::size_t i = 0; i < closed.size() && r.multiplicative; ++i)
    for (std::size_t j = i; j < closed.size(); ++j) {
      ++r.probes;
      if (f(diagram::tensor(closed[i], closed[j])) != f(closed[i]) * f(closed[j])) {
        r.multiplicative = false;
        if (r.detail.empty())
          r.detail = "f(a b) != f(a) f(b) for a = " + diagram::to_string(closed[i]) + ", b = " + diagram::to_string(closed[j]);
        break;
      }
    }

  bounds.max_loops = 0;
  const PropElt alt = lift(wprop::alt(d + 1), sig);
  r.kills_alt = true;
  for (const CanonMonomial& b : enumerate_monomials(sig, d + 1, d + 1, bounds)) {
    ++r.probes;
    const PropElt x = wprop::pairing(alt, PropElt::monomial(sig, b));
    Rat v;
    for (const auto& [m, c] : x.terms()) v += c * f(m);
    if (!v.is_zero()) {
      r.kills_alt = false;
      if (r.detail.empty()) r.detail = "f<Alt, B> = " + v.to_string() + " for B = " + diagram::to_string(b);
      break;
    }
  }
  return r;
}

ClosedFunctional trace_functional(const RatRep& rep) {
  return [rep](const CanonMonomial& m) { return eval_monomial(rep, m).scalar_value(); };
}

}  // namespace propcalc::teval
