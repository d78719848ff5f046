#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propcalc::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, size_limit = 3 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace propcalc::cli
