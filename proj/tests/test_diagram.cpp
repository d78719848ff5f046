#include <doctest.h>

#include <map>
#include <set>

#include "oracles/canon_oracle.hpp"
#include "oracles/rng.hpp"
#include "propcalc/diagram/monomial.hpp"
#include "propcalc/diagram/parser.hpp"

using namespace propcalc::diagram;
using propcalc::symgroup::Perm;

namespace {

Signature sig_ab() {
  return Signature::parse("gen A : 2 -> 1\ngen B : 0 -> 1\n");
}

CanonMonomial canon_of(const std::string& text, const Signature& sig) {
  const auto terms = parse_expression(text, sig);
  REQUIRE(terms.size() == 1);
  return canonicalize(terms[0].molecule, terms[0].inputs, terms[0].outputs, &sig);
}

}  // namespace

TEST_CASE("signature files") {
  const Signature s = Signature::parse("# lie\ngen L : 2 -> 1\n\ngen K : 2 -> 0\n");
  CHECK(s.arity("L") == Arity{2, 1});
  CHECK(s.arity("K") == Arity{2, 0});
  CHECK(Signature::parse(s.to_string()) == s);
  CHECK_THROWS_AS(Signature::parse("gen L 2 -> 1"), DiagramError);
  CHECK_THROWS_AS(Signature::parse("gen L : 2 -> 1\ngen L : 1 -> 1"), DiagramError);
  CHECK(is_identifier("x_1"));
  CHECK_FALSE(is_identifier("1x"));
}

TEST_CASE("parsing the molecule with a bound identity") {
  const Signature sig = sig_ab();
  const auto terms = parse_expression("A^{x,z}_y id^y_w B_x", sig);
  REQUIRE(terms.size() == 1);
  const Molecule& m = terms[0].molecule;
  CHECK(free_inputs(m) == std::vector<std::string>{"z"});
  CHECK(free_outputs(m) == std::vector<std::string>{"w"});
  const CanonMonomial c = canonicalize(m, terms[0].inputs, terms[0].outputs, &sig);
  CHECK(c.p == 1);
  CHECK(c.q == 1);
  CHECK(c.box_count() == 2);
}

TEST_CASE("parse errors") {
  const Signature sig = sig_ab();
  CHECK_THROWS_AS(parse_expression("A^{x,x}_y", sig), ParseError);
  CHECK_THROWS_AS(parse_expression("C^x_y", sig), DiagramError);
  CHECK_THROWS_AS(parse_expression("A^x_y", sig), DiagramError);
  CHECK_THROWS_AS(parse_expression("A^{x,z}_y B_x B_x", sig), DiagramError);
  CHECK_THROWS_AS(parse_expression("A^{x,z}_y [x;y]", sig), DiagramError);
  CHECK_THROWS_AS(parse_expression("t*B_x", sig), DiagramError);
  try {
    parse_expression("id^x_y + A^{x,x}_y", sig);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() >= 10);
  }
}

TEST_CASE("identity reductions") {
  const Signature none;
  const CanonMonomial chain = canon_of("id^x_y id^y_z", none);
  CHECK(chain == identity_monomial());
  CHECK(to_string(chain) == "id^v0_v1 [v0;v1]");
  const CanonMonomial loop = canon_of("id^x_y id^y_x", none);
  CHECK(loop == loop_monomial(1));
  CHECK(loop.p == 0);
  CHECK(canon_of("id^z_z", none) == loop_monomial(1));
  const Signature sig = sig_ab();
  CHECK(canon_of("id^y_z A^{a,b}_y", sig) == canon_of("A^{a,b}_z", sig));
  CHECK(canon_of("A^{a,b}_y id^c_a", sig) == canon_of("A^{c,b}_y", sig));
}

TEST_CASE("port order matters") {
  const Signature sig = sig_ab();
  CHECK_FALSE(canon_of("A^{a,b}_y [a,b;y]", sig) == canon_of("A^{a,b}_y [b,a;y]", sig));
  CHECK(canon_of("A^{a,b}_y [a,b;y]", sig) == canon_of("A^{b,a}_y [b,a;y]", sig));
}

TEST_CASE("products of classes") {
  const Signature sig = sig_ab();
  const auto t1 = parse_expression("A^{x,z}_y B_x", sig)[0].molecule;
  const auto t2 = parse_expression("A^{x,s}_u B_x", sig)[0].molecule;
  const Molecule ab = product_classes({t1, t2}), ba = product_classes({t2, t1});
  const auto ins = free_inputs(ab), outs = free_outputs(ab);
  CHECK(ins.size() == 2);
  CHECK(canonicalize(ab, ins, outs, &sig) == canonicalize(ba, ins, outs, &sig));
  const auto loop = parse_expression("id^z_z", Signature())[0].molecule;
  const Molecule two = product_classes({loop, loop});
  CHECK(canonicalize(two, {}, {}) == loop_monomial(2));
  CHECK(canonicalize(product_classes({t1, Molecule{}}), {"z"}, {"y"}, &sig) == canonicalize(t1, {"z"}, {"y"}, &sig));
  CHECK_THROWS_AS(product_classes({t1, t1}), DiagramError);
}

TEST_CASE("permutation monomials") {
  for (const auto& s : Perm::all(3)) {
    const CanonMonomial m = perm_monomial(s);
    CHECK(as_perm(m) == s);
    CHECK(pairing(m, identity_monomial().p == 1 ? perm_monomial(Perm::identity(3)) : m).loops == s.cycle_count());
  }
  CHECK(contract(identity_monomial(), 1, 1) == loop_monomial(1));
}

TEST_CASE("canonical form is invariant under renaming and re-expansion") {
  const Signature sig = sig_ab();
  oracle::Rng rng(3);
  const std::vector<std::string> samples = {
      "A^{x,z}_y id^y_w B_x", "A^{a,b}_c A^{c,d}_e B_a B_d", "A^{a,b}_c A^{c,d}_b", "A^{x,y}_z id^z_x B_y id^u_u",
      "A^{a,b}_c A^{d,e}_f [b,a,e,d;f,c]"};
  for (const auto& text : samples) {
    const auto term = parse_expression(text, sig)[0];
    const CanonMonomial base = canonicalize(term.molecule, term.inputs, term.outputs, &sig);
    VarGen gen("q");
    const Expanded ex = expand(base, gen);
    CHECK(canonicalize(ex.molecule, ex.inputs, ex.outputs, &sig) == base);
    for (int trial = 0; trial < 20; ++trial) {
      std::set<std::string> vars;
      for (const auto& a : term.molecule.atoms) {
        vars.insert(a.inputs.begin(), a.inputs.end());
        vars.insert(a.outputs.begin(), a.outputs.end());
      }
      std::vector<std::string> names(vars.begin(), vars.end()), fresh;
      for (std::size_t k = 0; k < names.size(); ++k) fresh.push_back("r" + std::to_string(k));
      rng.shuffle(fresh);
      std::map<std::string, std::string> ren;
      for (std::size_t k = 0; k < names.size(); ++k) ren[names[k]] = fresh[k];
      Molecule m = term.molecule;
      for (auto& a : m.atoms) {
        for (auto& v : a.inputs) v = ren[v];
        for (auto& v : a.outputs) v = ren[v];
      }
      rng.shuffle(m.atoms);
      std::vector<std::string> ins, outs;
      for (const auto& v : term.inputs) ins.push_back(ren[v]);
      for (const auto& v : term.outputs) outs.push_back(ren[v]);
      CHECK(canonicalize(m, ins, outs, &sig) == base);
    }
  }
}

TEST_CASE("canonical equality matches brute-force equivalence on small molecules") {
  const std::vector<std::tuple<std::string, int, int>> kinds = {{"A", 1, 1}, {"B", 0, 1}, {"", 1, 1}};
  const Signature sig = Signature::parse("gen A : 1 -> 1\ngen B : 0 -> 1\n");
  const auto mols = oracle::all_molecules(kinds, 3);
  CHECK(mols.size() > 500);
  std::map<CanonMonomial, std::set<oracle::Wiring>> by_lib;
  std::map<oracle::Wiring, std::set<CanonMonomial>> by_oracle;
  for (const auto& sm : mols) {
    const CanonMonomial c = canonicalize(sm.molecule, sm.inputs, sm.outputs, &sig);
    const oracle::Wiring w = oracle::canonical(oracle::reduce(sm.molecule, sm.inputs, sm.outputs));
    by_lib[c].insert(w);
    by_oracle[w].insert(c);
  }
  std::size_t bad = 0;
  for (const auto& [c, ws] : by_lib) bad += ws.size() != 1;
  for (const auto& [w, cs] : by_oracle) bad += cs.size() != 1;
  CHECK(bad == 0);
  CHECK(by_lib.size() == by_oracle.size());
}

TEST_CASE("a two-input generator in the brute-force comparison") {
  const std::vector<std::tuple<std::string, int, int>> kinds = {{"A", 2, 1}, {"", 1, 1}};
  const auto mols = oracle::all_molecules(kinds, 2);
  std::map<CanonMonomial, std::set<oracle::Wiring>> by_lib;
  std::map<oracle::Wiring, std::set<CanonMonomial>> by_oracle;
  const Signature sig = Signature::parse("gen A : 2 -> 1\n");
  for (const auto& sm : mols) {
    const CanonMonomial c = canonicalize(sm.molecule, sm.inputs, sm.outputs, &sig);
    const oracle::Wiring w = oracle::canonical(oracle::reduce(sm.molecule, sm.inputs, sm.outputs));
    by_lib[c].insert(w);
    by_oracle[w].insert(c);
  }
  for (const auto& [c, ws] : by_lib) CHECK(ws.size() == 1);
  for (const auto& [w, cs] : by_oracle) CHECK(cs.size() == 1);
}

TEST_CASE("tensor, act and contract on monomials") {
  const Signature sig = sig_ab();
  const CanonMonomial a = canon_of("A^{a,b}_c", sig);
  const CanonMonomial b = canon_of("B_x", sig);
  const CanonMonomial ab = tensor(a, b);
  CHECK(ab.p == 2);
  CHECK(ab.q == 2);
  CHECK(contract(tensor(b, a), 1, 1) == canon_of("A^{x,b}_c B_x", sig));
  const Perm s = Perm::parse(2, "21");
  CHECK(act(s, Perm::identity(1), a) == canon_of("A^{a,b}_c [b,a;c]", sig));
  CHECK(act(s, Perm::identity(1), act(s, Perm::identity(1), a)) == a);
}
