#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spherical::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kInvalidInput = 2,
    kResourceRefusal = 3,
};

/// Runs the sphfun command line (args excludes the program name) and returns
/// the exit code. Records go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spherical::cli
