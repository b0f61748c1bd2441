#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sixterm::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kValidationError = 2,
    kBudgetExceeded = 3,
};

/// Leaves allowed by default; the X = 1 reproduction sweep needs ~1.75e9.
inline constexpr double kDefaultLeafBudget = 4e9;

/// Runs the command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixterm::cli
