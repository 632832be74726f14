#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tough::cli {

/// Exit codes: 0 success, 1 negative verification (check failed, graph lacks
/// the property, sweep mismatch), 2 usage, input or precondition error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tough::cli
