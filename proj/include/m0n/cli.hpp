#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace m0n {

enum ExitCode : int {
    kExitOk = 0,
    kExitCertificationFailed = 1,
    kExitUsage = 2,
    kExitBudget = 3,
};

/// Runs one command.  `args` excludes the program name, e.g.
/// {"basis", "--n", "5", "--degree", "1"}.  Results go to `out`,
/// diagnostics and warnings to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace m0n
