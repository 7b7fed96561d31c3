#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdk::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Runs the command line given as argv-style arguments (args[0] is the program name).
/// Primary output goes to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdk::cli
