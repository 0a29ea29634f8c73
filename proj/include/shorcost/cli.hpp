#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shorcost {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInfeasible = 2,
    kExitVerifyFailed = 3,
};

/// Runs one command line. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shorcost
