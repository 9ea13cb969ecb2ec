#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptosc::cli {

/// Process exit statuses of the ptosc tool.
enum ExitStatus : int {
    kSuccess = 0,
    kFailure = 1,            ///< numerical failure (convergence, resources, I/O)
    kUsage = 2,              ///< bad or missing command-line arguments
    kDomain = 3,             ///< parameters violate a module precondition
    kValidationBreach = 4,   ///< validate: a tolerance was exceeded
};

/// Runs the tool on `args` (without the program name). Tables go to `out` unless --output is
/// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptosc::cli
