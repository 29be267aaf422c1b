#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atomroute::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;  // violations, cap, non-convergence, bound
inline constexpr int kUsageError = 2;     // bad flags, unreadable or malformed input

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atomroute::cli
