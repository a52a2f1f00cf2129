#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixcay::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kViolation = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixcay::cli
