#include <doctest.h>

#include "oracles/rng.hpp"
#include "propcalc/scalars/linalg.hpp"
#include "propcalc/scalars/mpoly.hpp"
#include "propcalc/scalars/poly_t.hpp"
#include "propcalc/scalars/rat.hpp"

using namespace propcalc::scalars;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(6, -4).to_string() == "-3/2");
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse("-7").is_integer());
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK(Rat(2, 3) < Rat(3, 4));
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS(Rat(1) / Rat(0));
  CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
  CHECK(factorial(5) == Rat(120));
}

TEST_CASE("large values do not overflow") {
  Rat r = factorial(30) / factorial(28);
  CHECK(r == Rat(870));
  CHECK(factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("polynomials parse and print") {
  CHECK(PolyT::parse("t^3 - 3*t^2 + 2*t") == PolyT::parse("t*(t-1)*(t-2)"));
  CHECK(PolyT::parse("(t-1)*(t+2)").to_string() == "t^2 + t - 2");
  CHECK(PolyT::parse("1/2").to_string() == "1/2");
  CHECK(PolyT().to_string() == "0");
  CHECK(PolyT::parse("t - 1").to_string() == "t - 1");
  CHECK(PolyT::parse("-t").to_string() == "-t");
  CHECK_THROWS_AS(PolyT::parse("t +"), std::invalid_argument);
  CHECK_THROWS_AS(PolyT::parse("x"), std::invalid_argument);
}

TEST_CASE("division, gcd and falling factorial") {
  const PolyT a = PolyT::parse("(t-1)*(t+2)*(t+2)");
  const PolyT b = PolyT::parse("(t+2)*(t-3)");
  CHECK(gcd(a, b) == PolyT::parse("t+2"));
  CHECK(divides(PolyT::parse("t+2"), a));
  CHECK_FALSE(divides(PolyT::parse("t-3"), a));
  CHECK(exact_div(a, PolyT::parse("t-1")) == PolyT::parse("(t+2)^2"));
  CHECK_THROWS_AS(exact_div(a, PolyT::parse("t")), std::domain_error);
  CHECK_THROWS_AS(gcd(PolyT(), PolyT()), std::domain_error);
  CHECK(falling_factorial(0) == PolyT::t());
  CHECK(falling_factorial(2) == PolyT::parse("t*(t-1)*(t-2)"));
  CHECK(falling_factorial(3).eval(Rat(3)).is_zero());
  CHECK(falling_factorial(3).eval(Rat(4)) == Rat(24));
}

TEST_CASE("divmod and extended gcd identities on random input") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PolyT a = rng.poly(rng.uniform(0, 5));
    PolyT b = rng.poly(rng.uniform(0, 3));
    if (b.is_zero()) b = PolyT(1);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    if (a.is_zero()) continue;
    const auto eg = ext_gcd(a, b);
    CHECK(eg.g.is_monic());
    CHECK(eg.u * a + eg.v * b == eg.g);
    CHECK(divides(eg.g, a));
    CHECK(divides(eg.g, b));
  }
}

TEST_CASE("multivariate polynomials") {
  const MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
  const MPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  const auto at = [&](VarId v) { return VarRegistry::instance().name(v) == "x" ? Rat(3) : Rat(2); };
  CHECK(p.eval(at) == Rat(5));
  CHECK(MPoly(Rat(4)).is_constant());
}

TEST_CASE("row reduction") {
  RowReducer rr(3);
  CHECK(rr.add_row(std::vector<Rat>{1, 2, 3}));
  CHECK(rr.add_row(std::vector<Rat>{2, 4, 7}));
  CHECK_FALSE(rr.add_row(std::vector<Rat>{3, 6, 10}));
  CHECK(rr.rank() == 2);
  const auto ns = rr.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + Rat(2) * ns[0][1] + Rat(3) * ns[0][2] == Rat(0));
  CHECK(rank({{1, 1}, {1, 1}}) == 1);
  CHECK(inverse({{1, 1}, {1, 1}}).empty());
  const auto inv = inverse({{2, 1}, {1, 1}});
  CHECK(inv == std::vector<std::vector<Rat>>{{1, -1}, {-1, 2}});
}
