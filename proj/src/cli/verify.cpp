#include "propcalc/cli/verify.hpp"

#include <future>
#include <stdexcept>

#include "propcalc/scalars/poly_t.hpp"
#include "propcalc/symgroup/tableau.hpp"
#include "propcalc/teval/checks.hpp"
#include "propcalc/teval/kernel.hpp"
#include "propcalc/wprop/z_bridge.hpp"
#include "propcalc/zideal/contraction.hpp"

namespace propcalc::cli {

using symgroup::Partition;
using symgroup::Perm;

namespace {

void symmetrizer_suite(const VerifyOptions& opt, SuiteResult& r) {
  int count = 0;
  r.ok = true;
  for (int n = 1; n <= opt.max_n; ++n)
    for (const Partition& shape : Partition::all(n))
      for (const auto& tab : symgroup::Tableau::standard(shape)) {
        ++count;
        try {
          const auto c = zideal::contract_symmetrizer(tab);
          r.lines.push_back(tab.to_string() + "  factor " + c.factor.to_string());
        } catch (const std::logic_error& e) {
          r.ok = false;
          r.lines.push_back(tab.to_string() + "  FAIL " + e.what());
        }
      }
  r.lines.push_back(std::to_string(count) + " standard tableaux with n <= " + std::to_string(opt.max_n));
}

void div2_suite(const VerifyOptions& opt, SuiteResult& r) {
  r.ok = true;
  for (int n = 1; n <= opt.max_n; ++n)
    for (const Partition& lambda : Partition::all(n)) {
      const auto rep = zideal::check_div2(lambda);
      std::string d1;
      const bool ok1 = zideal::check_div1(lambda, &d1);
      r.ok = r.ok && rep.ok && ok1;
      std::string line = lambda.to_string() + "  rank " + std::to_string(rep.rank) + "/" + std::to_string(rep.expected_rank);
      if (!rep.ok) line += "  FAIL " + rep.detail;
      if (!ok1) line += "  FAIL induction: " + d1;
      r.lines.push_back(line);
    }
}

std::string row(const teval::RatTensor& k, int a) {
  std::string s;
  for (int b = 0; b < k.dim(); ++b) s += (b ? " " : "") + k.at({a, b}).to_string();
  return s;
}

void lie_suite(const VerifyOptions& opt, SuiteResult& r) {
  const std::vector<std::string> names = opt.algebra.empty() ? std::vector<std::string>{"sl2", "so3"}
                                                             : std::vector<std::string>{opt.algebra};
  r.ok = true;
  for (const auto& name : names) {
    const auto L = teval::lie_structure(name);
    const auto rep = teval::check_lie(L.dim(), L);
    for (auto& line : lie_report_lines(name, rep)) r.lines.push_back(std::move(line));
    // the named semisimple algebras must pass everything
    const bool want_semisimple = name == "sl2" || name == "so3";
    r.ok = r.ok && rep.ok() && (!want_semisimple || rep.nondegenerate);
  }
}

void alt_suite(const VerifyOptions& opt, SuiteResult& r) {
  const int lo = opt.dim > 0 ? opt.dim : 1, hi = opt.dim > 0 ? opt.dim : 3;
  r.ok = true;
  for (int n = lo; n <= hi; ++n) {
    teval::RatRep rep;
    rep.dim = n;
    const bool kills = teval::eval(rep, wprop::alt(n + 1)).is_zero();
    const bool below = !teval::eval(rep, wprop::alt(n)).is_zero();
    const bool loop = teval::eval(rep, wprop::loops(1)).scalar_value() == scalars::Rat(n);
    r.ok = r.ok && kills && below && loop;
    r.lines.push_back("dim " + std::to_string(n) + ": alt(" + std::to_string(n + 1) + ") " + (kills ? "-> 0" : "FAIL nonzero") +
                      ", alt(" + std::to_string(n) + ") " + (below ? "-> nonzero" : "FAIL zero") + ", loop " +
                      (loop ? "-> " + std::to_string(n) : std::string("FAIL")));
  }
  for (int d = 0; d <= 4; ++d) {
    const auto x = wprop::z_to_group_algebra(wprop::pairing(wprop::alt(d + 1), wprop::perm_elt(Perm::identity(d + 1))));
    const scalars::PolyT v = x.coefficient(Perm::identity(0));
    const bool ok = v == scalars::falling_factorial(d);
    r.ok = r.ok && ok;
    r.lines.push_back("<alt(" + std::to_string(d + 1) + "), id> = " + v.to_string() + (ok ? "" : "  FAIL"));
  }
}

void kernel_suite(const VerifyOptions& opt, SuiteResult& r) {
  const int lo = opt.dim > 0 ? opt.dim : 1, hi = opt.dim > 0 ? opt.dim : 2;
  teval::MonomialBounds bounds;
  bounds.limit = opt.limit;
  r.ok = true;
  for (int n = lo; n <= hi; ++n) {
    for (int p = 1; p <= n; ++p) {
      const auto k = teval::relation_kernel({}, n, p, p, bounds);
      r.ok = r.ok && k.basis.empty();
      r.lines.push_back("dim " + std::to_string(n) + " type (" + std::to_string(p) + "," + std::to_string(p) +
                        "): kernel " + std::to_string(k.basis.size()) + (k.basis.empty() ? "" : "  FAIL"));
    }
    const auto k = teval::relation_kernel({}, n, n + 1, n + 1, bounds);
    const auto a = wprop::alt(n + 1);
    bool orbit = true;
    for (const Perm& s : Perm::all(n + 1))
      for (const Perm& t : Perm::all(n + 1)) orbit = orbit && teval::in_span(k.basis, wprop::act(s, t, a));
    r.ok = r.ok && orbit;
    r.lines.push_back("dim " + std::to_string(n) + " type (" + std::to_string(n + 1) + "," + std::to_string(n + 1) + "): kernel " +
                      std::to_string(k.basis.size()) + ", alt orbit " + (orbit ? "inside" : "FAIL outside"));
  }
}

}  // namespace

std::vector<std::string> lie_report_lines(const std::string& name, const teval::LieReport& rep) {
  auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
  std::vector<std::string> lines{name + ":"};
  lines.push_back(std::string("  antisymmetry ") + mark(rep.antisymmetric));
  lines.push_back(std::string("  jacobi ") + mark(rep.jacobi));
  lines.push_back(std::string("  killing ") + mark(rep.killing_ok));
  for (int a = 0; a < rep.killing.dim(); ++a) lines.push_back("    " + row(rep.killing, a));
  if (rep.nondegenerate) {
    lines.push_back(std::string("  casimir ") + mark(rep.casimir_ok));
    lines.push_back(std::string("  lowered alternating ") + mark(rep.lowered_alternating));
  } else {
    lines.push_back("  not semisimple");
  }
  return lines;
}

std::vector<std::string> suite_names() { return {"symmetrizer", "div2", "lie", "alt", "kernel"}; }

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = name;
  try {
    if (name == "symmetrizer") symmetrizer_suite(opt, r);
    else if (name == "div2") div2_suite(opt, r);
    else if (name == "lie") lie_suite(opt, r);
    else if (name == "alt") alt_suite(opt, r);
    else if (name == "kernel") kernel_suite(opt, r);
    else throw std::invalid_argument("unknown suite '" + name + "'");
  } catch (const teval::SizeLimitError& e) {
    r.ok = false;
    r.size_limited = true;
    r.lines.push_back(std::string("size limit exceeded: ") + e.what());
  }
  return r;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt) {
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, opt));
  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace propcalc::cli
