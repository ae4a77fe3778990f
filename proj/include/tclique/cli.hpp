#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tclique::cli {

enum ExitCode : int { ok = 0, negative = 1, input_error = 2, budget_exhausted = 3 };

/// Name of the environment variable holding the default --budget-ms.
inline constexpr const char * budget_env = "TCLIQUE_BUDGET_MS";

/// Runs one command line (without the program name), writing the JSON report
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace tclique::cli
