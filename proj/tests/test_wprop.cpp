#include <doctest.h>

#include "oracles/closure.hpp"
#include "oracles/rng.hpp"
#include "propcalc/wprop/prop_elt.hpp"
#include "propcalc/wprop/z_bridge.hpp"

using namespace propcalc::wprop;
using propcalc::scalars::PolyT;
using propcalc::symgroup::GAElt;
using propcalc::symgroup::Perm;

namespace {

const Signature& sig_ab() {
  static const Signature s = Signature::parse("gen A : 2 -> 1\ngen B : 1 -> 1\n");
  return s;
}

PropElt el(const std::string& text, const Signature& sig = Signature()) { return PropElt::parse(text, sig); }

// act built from tensor and contract: feed the inputs through [σ⁻¹] and the
// outputs through [τ].
PropElt act_oracle(const Perm& sigma, const Perm& tau, const PropElt& a) {
  const Signature& sig = a.sig();
  PropElt x = tensor(a, perm_elt(sigma.inverse(), sig));
  for (int k = 0; k < a.p(); ++k) x = contract(x, 1, a.q() + 1);
  PropElt y = tensor(x, perm_elt(tau, sig));
  for (int k = 0; k < a.q(); ++k) y = contract(y, a.p() + 1, 1);
  return y;
}

Perm random_perm(oracle::Rng& rng, int n) {
  const auto all = Perm::all(n);
  return all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
}

// random element of type (2,1) over {A,B}
PropElt random_21(oracle::Rng& rng) {
  const std::vector<std::string> pool = {"A^{a,b}_c", "A^{b,a}_c", "B^a_x A^{x,b}_c", "A^{a,b}_x B^x_c",
                                         "A^{a,x}_c B^b_x", "A^{a,b}_x B^x_y B^y_c id^u_u", "A^{a,y}_c B^b_y [b,a;c]"};
  PropElt r(sig_ab(), 2, 1);
  for (const auto& t : pool)
    if (rng.coin(0.5)) r += el(t, sig_ab()) * rng.nonzero_rat();
  if (r.is_zero()) r = el(pool[0], sig_ab());
  return r;
}

}  // namespace

TEST_CASE("units and identity") {
  CHECK(tensor(unit(), unit()) == unit());
  CHECK(tensor(identity(), unit()) == identity());
  CHECK(contract(identity(), 1, 1) == loops(1));
  CHECK(contract(identity(), 1, 1).to_string() == "t");
  CHECK(tensor(identity(), identity()) == perm_elt(Perm::identity(2)));
  const PropElt a = el("A^{a,b}_c", sig_ab());
  CHECK(tensor(a * Rat(2), el("B^x_y", sig_ab()) * Rat(3)) == tensor(a, el("B^x_y", sig_ab())) * Rat(6));
  CHECK_THROWS(contract(identity(), 2, 1));
  CHECK_THROWS(tensor(a, identity()));
}

TEST_CASE("contracting every strand of the identity gives a power of t") {
  for (int n = 1; n <= 4; ++n) {
    PropElt x = perm_elt(Perm::identity(n));
    for (int k = n; k >= 1; --k) x = contract(x, k, k);
    CHECK(x == loops(n));
  }
}

TEST_CASE("alt elements") {
  CHECK(alt(1) == identity());
  CHECK(alt(2) == perm_elt(Perm::identity(2)) - perm_elt(Perm::parse(2, "(1 2)")));
  const PropElt a3 = alt(3);
  CHECK(a3.terms().size() == 6);
  for (const auto& s : Perm::all(3)) CHECK(a3.coefficient(perm_elt(s).terms().begin()->first) == Rat(s.sign()));
  CHECK(pairing(a3, perm_elt(Perm::identity(3))) == loops(3) - loops(2) * Rat(3) + loops(1) * Rat(2));
}

TEST_CASE("pairing permutations counts cycles") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : Perm::all(n)) CHECK(pairing(perm_elt(s), perm_elt(Perm::identity(n))) == loops(s.cycle_count()));
}

TEST_CASE("composition of wire diagrams follows the group law") {
  // [a][b]: b's outputs feed a's inputs
  for (const auto& a : Perm::all(3))
    for (const auto& b : Perm::all(3)) {
      PropElt x = tensor(perm_elt(a), perm_elt(b));
      for (int k = 0; k < 3; ++k) x = contract(x, 1, 4);
      CHECK(x == perm_elt(a * b));
    }
}

TEST_CASE("act agrees with the tensor and contract construction") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const PropElt a = random_21(rng);
    const Perm s = random_perm(rng, 2), t = Perm::identity(1);
    CHECK(act(s, t, a) == act_oracle(s, t, a));
  }
  for (const auto& s : Perm::all(3))
    for (const auto& t : Perm::all(3)) {
      const PropElt z = perm_elt(Perm::parse(3, "(1 2 3)"));
      CHECK(act(s, t, z) == act_oracle(s, t, z));
    }
  CHECK(act(Perm::parse(3, "(1 2)"), Perm::identity(3), perm_elt(Perm::identity(3))) == perm_elt(Perm::parse(3, "(1 2)")));
}

TEST_CASE("act is a group action and adjoint under pairing") {
  oracle::Rng rng(23);
  const PropElt z = el("A^{a,y}_c A^{x,b}_y B^z_x [a,z,b;c]", sig_ab());
  for (int trial = 0; trial < 30; ++trial) {
    const Perm s1 = random_perm(rng, 3), s2 = random_perm(rng, 3), t1 = random_perm(rng, 3), t2 = random_perm(rng, 3);
    PropElt x(Signature(), 3, 3);
    for (const auto& s : Perm::all(3))
      if (rng.coin()) x += perm_elt(s) * rng.nonzero_rat();
    CHECK(act(s1, t1, act(s2, t2, x)) == act(s1 * s2, t1 * t2, x));
    PropElt y(Signature(), 3, 3);
    for (const auto& s : Perm::all(3))
      if (rng.coin()) y += perm_elt(s) * rng.nonzero_rat();
    CHECK(pairing(act(s1, t1, x), y) == pairing(x, act(t1.inverse(), s1.inverse(), y)));
  }
  CHECK_FALSE(z.is_zero());
  CHECK(act(Perm::identity(3), Perm::identity(1), z) == z);
}

TEST_CASE("substitution: the worked single-generator example") {
  const Signature src = Signature::parse("gen A : 2 -> 2\n");
  const Signature dst = Signature::parse("gen B : 1 -> 1\n");
  const PropElt a = el("A^{x,y}_{x,z} A^{v,w}_{y,v} [w;z]", src);
  const PropElt psi = el("id^x_w B^y_z [x,y;w,z]", dst);
  CHECK(substitute(a, {{"A", psi}}, dst) == el("B^w_y B^y_z id^v_v [w;z]", dst));
  CHECK(substitute(a, {{"A", el("A^{a,b}_{c,d} [a,b;c,d]", src)}}, src) == a);
  CHECK_THROWS(substitute(a, {{"A", el("B^x_y", dst)}}, dst));
}

TEST_CASE("substitution expands multilinearly") {
  const Signature src = Signature::parse("gen A : 2 -> 2\n");
  const PropElt a = el("A^{x,y}_{x,z} A^{v,w}_{y,v} [w;z]", src);
  const PropElt e = el("id^a_c id^b_d [a,b;c,d]"), s = el("id^a_d id^b_c [a,b;c,d]");
  // by hand: EE -> t, ES -> t^2, SE -> 1, SS -> t
  const PropElt got = substitute(a, {{"A", e * Rat(2) - s}}, Signature());
  CHECK(got == el("(-2*t^2 + 5*t - 2)*id^w_z"));
  CHECK(substitute(a, {{"A", e}}, Signature()) == el("t*id^w_z"));
  CHECK(substitute(a, {{"A", s}}, Signature()) == el("t*id^w_z"));
}

TEST_CASE("substitutions compose") {
  oracle::Rng rng(29);
  const Signature mid = Signature::parse("gen C : 2 -> 1\n");
  for (int trial = 0; trial < 15; ++trial) {
    const PropElt a = random_21(rng);
    const std::map<std::string, PropElt> psi1 = {
        {"A", el("C^{a,b}_c", mid) * rng.nonzero_rat() + el("C^{b,a}_c", mid) * rng.rat()},
        {"B", el("id^a_b", mid) * rng.nonzero_rat()}};
    const std::map<std::string, PropElt> psi2 = {{"C", el("A^{a,b}_c", sig_ab()) + el("B^a_x A^{x,b}_c", sig_ab()) * rng.rat()}};
    std::map<std::string, PropElt> both;
    for (const auto& [g, v] : psi1) both[g] = substitute(v, psi2, sig_ab());
    CHECK(substitute(substitute(a, psi1, mid), psi2, sig_ab()) == substitute(a, both, sig_ab()));
    CHECK(substitute(tensor(a, a), psi1, mid) == tensor(substitute(a, psi1, mid), substitute(a, psi1, mid)));
    CHECK(substitute(contract(a, 1, 1), psi1, mid) == contract(substitute(a, psi1, mid), 1, 1));
  }
}

TEST_CASE("tensor is associative and contractions on disjoint pairs commute") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const PropElt a = random_21(rng), b = random_21(rng), c = el("B^x_y", sig_ab());
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    const PropElt ab = tensor(a, b);  // type (4,2)
    CHECK(contract(contract(ab, 1, 1), 2, 1) == contract(contract(ab, 3, 2), 1, 1));
  }
}

TEST_CASE("bridge to the group algebra") {
  CHECK(z_to_group_algebra(tensor(identity(), identity())) == GAElt::identity(2));
  CHECK(z_to_group_algebra(tensor(loops(1), identity())) == GAElt::identity(1) * PolyT::t());
  CHECK_THROWS(z_to_group_algebra(el("B^x_y", sig_ab())));
  oracle::Rng rng(37);
  oracle::Closure cl(4);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.uniform(1, 4);
    GAElt g(n);
    oracle::QtVec v = cl.zero(n);
    for (const auto& s : Perm::all(n))
      if (rng.coin(0.4)) {
        const PolyT c = rng.poly(2);
        g.add(s, c);
        v[cl.index(n, s.images0())] += c;
      }
    CHECK(z_to_group_algebra(group_algebra_to_z(g)) == g);
    // last-strand contraction and extension against the oracle
    const GAElt c = contract_last(g);
    const oracle::QtVec cv = cl.contract(n, v);
    for (const auto& s : Perm::all(n - 1)) CHECK(c.coefficient(s) == cv[cl.index(n - 1, s.images0())]);
    if (n < 4) {
      const GAElt e = extend_by_identity(g);
      const oracle::QtVec ev = cl.extend(n, v);
      for (const auto& s : Perm::all(n + 1)) CHECK(e.coefficient(s) == ev[cl.index(n + 1, s.images0())]);
    }
    CHECK(group_algebra_to_z(c) == contract(group_algebra_to_z(g), n, n));
  }
}

TEST_CASE("printing") {
  CHECK(el("2*t^2*id^x_y - id^x_y").to_string() == "(2*t^2-1)*id^v0_v1 [v0;v1]");
  CHECK(unit().to_string() == "1");
  CHECK(PropElt(Signature(), 1, 1).to_string() == "0");
}
