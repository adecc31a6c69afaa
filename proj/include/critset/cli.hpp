#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critset {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFails = 1,
    kExitUsage = 2,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critset
