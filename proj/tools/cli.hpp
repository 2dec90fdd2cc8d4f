#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilorb::cli {

/// Exit codes of `run`.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorb::cli
