#include <doctest.h>

#include "oracles/closure.hpp"
#include "oracles/rng.hpp"
#include "oracles/tableau_oracle.hpp"
#include "propcalc/wprop/z_bridge.hpp"
#include "propcalc/zideal/contraction.hpp"
#include "propcalc/zideal/ideal.hpp"

using namespace propcalc::zideal;
using propcalc::scalars::Rat;
using propcalc::symgroup::Perm;
using propcalc::symgroup::Tableau;

namespace {

IdealData ideal(const std::string& f, std::set<Box> C) {
  IdealData d;
  d.f = PolyT::parse(f);
  d.C = std::move(C);
  return d;
}

GAElt from_sparse(const oracle::Sparse& s, int n) {
  GAElt g(n);
  for (const auto& [p, c] : s) {
    std::vector<int> one;
    for (int x : p) one.push_back(x + 1);
    g.add(n == 0 ? Perm::identity(0) : Perm(one), c);
  }
  return g;
}

oracle::QtVec to_vec(const oracle::Closure& cl, const GAElt& g) {
  oracle::QtVec v = cl.zero(g.n());
  for (const auto& [p, c] : g.terms()) v[cl.index(g.n(), p.images0())] += c;
  return v;
}

}  // namespace

TEST_CASE("g_lambda values") {
  CHECK(g_lambda(ideal("t-3", {}), Partition({2, 1})) == PolyT::parse("t-3"));
  CHECK(g_lambda(ideal("1", {{1, 1}}), Partition()) == PolyT::t());
  CHECK(g_lambda(ideal("1", {{1, 1}}), Partition({1})) == PolyT(1));
  CHECK(g_lambda(ideal("1", {{1, 1}, {1, 3}, {4, 2}}), Partition()) == PolyT::parse("t*(t+2)*(t-2)"));
  CHECK(g_lambda(ideal("1", {{1, 1}, {1, 3}, {4, 2}}), Partition({3})) == PolyT::parse("t-2"));
  CHECK_THROWS(g_lambda(IdealData::zero_ideal(), Partition()));
  CHECK_THROWS_AS(ideal("2*t", {}).check(), std::invalid_argument);
}

TEST_CASE("the worked contraction of the (2,1) symmetrizer") {
  const auto c = contract_symmetrizer(Tableau::parse("{1,2}{3}"));
  CHECK(c.factor == PolyT::parse("t-1"));
  CHECK(c.reduced == GAElt::identity(2) + GAElt(Perm::parse(2, "(1 2)")));
  CHECK(c.contraction.to_string() == "(t-1)*[e] + (t-1)*[(1 2)]");
}

TEST_CASE("rows and columns") {
  for (int n = 1; n <= 5; ++n) {
    const auto r = contract_symmetrizer(Tableau::row(n));
    CHECK(r.factor == PolyT::parse("t+" + std::to_string(n - 1)));
    CHECK(r.reduced == propcalc::symgroup::young_symmetrizer(Tableau::row(n - 1)));
    const auto c = contract_symmetrizer(Tableau::column(n));
    CHECK(c.factor == PolyT::parse("t-" + std::to_string(n - 1)));
  }
}

TEST_CASE("every tableau up to size 5 contracts as predicted") {
  int count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : Partition::all(n))
      for (const auto& tab : Tableau::standard(lambda)) {
        ++count;
        const auto got = contract_symmetrizer(tab);
        const oracle::Rows rows = tab.rows();
        const auto [i, j] = oracle::box_of(rows, n);
        oracle::Sparse expect = oracle::young(oracle::without_max(rows));
        for (auto& [p, c] : expect) c *= PolyT::t() + PolyT(Rat(j - i));
        const oracle::Sparse direct = oracle::contract_last(oracle::young(rows), n);
        CHECK(direct == expect);
        CHECK(got.contraction == from_sparse(direct, n - 1));
        CHECK(got.factor == PolyT::t() + PolyT(Rat(j - i)));
      }
  CHECK(count == 43);
}

TEST_CASE("contraction images of blocks") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : Partition::all(n)) {
      const auto rep = check_div2(lambda);
      CHECK_MESSAGE(rep.ok, lambda.to_string() << ": " << rep.detail);
      CHECK(rep.rank == rep.expected_rank);
    }
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : Partition::all(n)) CHECK(oracle::div2_holds(lambda.parts()));
}

TEST_CASE("blocks grow by one box") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& lambda : Partition::all(n)) CHECK(check_div1(lambda));
}

TEST_CASE("principal ideals") {
  CHECK(principal_ideal(Partition({2, 1}), PolyT(1)).g(Partition({1})) == PolyT::parse("(t+1)*(t-1)"));
  CHECK(normal_form(principal_ideal(Partition({1}), PolyT(1)), 3) == ideal("1", {{1, 1}}));
  for (int n = 0; n <= 3; ++n)
    for (const auto& lambda : Partition::all(n)) {
      const auto F = principal_ideal(lambda, PolyT::parse("t-2"));
      CHECK(compatibility_violation(F, 6).empty());
    }
  // against the closure of h J_lambda
  for (int n = 0; n <= 2; ++n)
    for (const auto& lambda : Partition::all(n)) {
      oracle::Closure cl(3);
      oracle::QtVec e = n == 0 ? oracle::QtVec{PolyT(1)} : oracle::central_idempotent(cl, lambda.parts());
      cl.generate(n, e);
      const auto F = principal_ideal(lambda, PolyT(1));
      for (int m = 0; m <= 3; ++m)
        for (const auto& mu : Partition::all(m)) {
          const PolyT g = F.g(mu);
          oracle::QtVec x = m == 0 ? oracle::QtVec{PolyT(1)} : oracle::central_idempotent(cl, mu.parts());
          for (auto& c : x) c *= g;
          CHECK(cl.contains(m, x));
          if (g.degree() > 0) {
            // nothing smaller lies in the closure
            oracle::QtVec y = m == 0 ? oracle::QtVec{PolyT(1)} : oracle::central_idempotent(cl, mu.parts());
            const auto [q, r] = propcalc::scalars::divmod(g, PolyT::t() + PolyT(Rat(-100)));
            (void)r;
            for (auto& c : y) c *= q;
            CHECK_FALSE(cl.contains(m, y));
          }
        }
    }
}

TEST_CASE("sums and generation") {
  const auto A = CompatFamily::of(ideal("t", {})), B = CompatFamily::of(ideal("t-1", {}));
  CHECK(normal_form(ideal_sum(A, B), 3) == ideal("1", {}));
  CHECK(normal_form(ideal_sum(A, A), 3) == ideal("t", {}));
  CHECK(normal_form(ideal_sum(principal_ideal(Partition(), PolyT::t()), principal_ideal(Partition({1}), PolyT(1))), 3) ==
        ideal("1", {{1, 1}}));
  const GAElt z = GAElt::identity(2) - GAElt(Perm::parse(2, "(1 2)"));
  CHECK(normal_form(generate({z}), 2) == ideal("1", {{1, 1}, {2, 1}}));
  CHECK(normal_form(generate({GAElt::identity(1) * PolyT::parse("t^2-t")}), 2) == ideal("t^2-t", {{1, 1}}));
  CHECK(normal_form(generate({GAElt::identity(0) * PolyT::parse("t^2-t")}), 2) == ideal("t^2-t", {}));
  CHECK(normal_form(CompatFamily::zero(), 2) == IdealData::zero_ideal());
}

TEST_CASE("normal form round trip") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    IdealData d;
    d.f = PolyT::monomial(Rat(1), rng.uniform(0, 3));
    for (int k = 0; k < d.f.degree(); ++k) d.f += PolyT::monomial(rng.rat(), k);
    const int boxes = rng.uniform(0, 3);
    for (int k = 0; k < boxes; ++k) d.C.insert({rng.uniform(1, 4), rng.uniform(1, 4)});
    CHECK(normal_form(CompatFamily::of(d), 4) == d);
    CHECK(compatibility_violation(CompatFamily::of(d), 5).empty());
  }
}

TEST_CASE("membership") {
  const IdealData d = ideal("1", {{1, 1}});
  CHECK(member(d, GAElt(0)));
  CHECK(member(d, GAElt::identity(0) * PolyT::t()));
  CHECK_FALSE(member(d, GAElt::identity(0)));
  CHECK(member(ideal("t-2", {}), GAElt(Perm::parse(3, "(1 2)"), PolyT::parse("t-2"))));
  CHECK(member(d, propcalc::wprop::PropElt::parse("id^x_y id^u_v", {})));
  CHECK_FALSE(member(ideal("t-2", {}), propcalc::wprop::PropElt::parse("id^x_y id^u_v", {})));
  CHECK(member(ideal("t-2", {}), propcalc::wprop::PropElt::parse("(t-2)*id^x_y id^u_v - (t^2-2*t)*id^x_v id^u_y", {})));
  CHECK(member(d, propcalc::wprop::PropElt({}, 2, 1)));
}

TEST_CASE("membership agrees with brute-force closure") {
  oracle::Rng rng(43);
  int members = 0, non_members = 0;
  for (int trial = 0; trial < 12; ++trial) {
    IdealData d;
    d.f = rng.coin() ? PolyT(1) : PolyT::parse("t-" + std::to_string(rng.uniform(-2, 2)));
    const int boxes = rng.uniform(0, 2);
    for (int k = 0; k < boxes; ++k) d.C.insert({rng.uniform(1, 3), rng.uniform(1, 3)});
    const oracle::Closure cl = oracle::ideal_closure(d.f, [&] {
      std::set<std::pair<int, int>> c;
      for (const auto& b : d.C) c.insert({b.i, b.j});
      return c;
    }());
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k < 6; ++k) {
        GAElt z(n);
        for (const auto& lambda : Partition::all(n)) {
          const GAElt e = propcalc::symgroup::central_idempotent(lambda);
          const GAElt side = GAElt(Perm::all(n)[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(Perm::all(n).size()) - 1))]);
          PolyT c = g_lambda(d, lambda) * rng.poly(1);
          if (rng.coin(0.3)) c = rng.poly(2);
          z += side * e * c;
        }
        const bool expect = cl.contains(n, to_vec(cl, z));
        CHECK(member(d, z) == expect);
        (expect ? members : non_members)++;
      }
  }
  CHECK(members > 10);
  CHECK(non_members > 10);
}

TEST_CASE("classification") {
  CHECK(classify(IdealData::zero_ideal()) == IdealClass::prime_not_maximal);
  CHECK(classify(ideal("t-5", {})) == IdealClass::prime_not_maximal);
  CHECK(classify(ideal("t-1/2", {})) == IdealClass::maximal);
  CHECK(classify(ideal("1", {{2, 2}})) == IdealClass::maximal);
  CHECK(classify(ideal("t^2", {})) == IdealClass::not_prime);
  CHECK(classify(ideal("t-1", {{1, 1}})) == IdealClass::not_prime);
  CHECK(classify(ideal("1", {{1, 1}, {2, 2}})) == IdealClass::not_prime);
  CHECK(classify(ideal("1", {})) == IdealClass::not_prime);
  CHECK(to_string(IdealClass::maximal) == "maximal");
}

TEST_CASE("picture") {
  CHECK(picture(ideal("1", {{1, 2}, {2, 1}})) == "□■\n■□\n");
}
