#pragma once

#include <string>
#include <vector>

#include "propcalc/teval/checks.hpp"

namespace propcalc::cli {

struct VerifyOptions {
  int max_n = 4;          // symmetrizer and div2 suites
  int dim = 0;            // alt and kernel suites; 0 means the default range
  std::string algebra;    // lie suite; empty means sl2 and so3
  std::size_t limit = 200000;
};

struct SuiteResult {
  std::string name;
  bool ok = false;
  bool size_limited = false;
  std::vector<std::string> lines;
};

std::vector<std::string> suite_names();

/// Human-readable lines for one check_lie report, Killing form included.
std::vector<std::string> lie_report_lines(const std::string& name, const teval::LieReport& rep);

/// Runs one suite. Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

/// Runs the named suites concurrently; results come back in input order.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt);

}  // namespace propcalc::cli
