#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccbench {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_failures = 1,
    exit_usage_or_protocol = 2,
};

/// Entry point behind the `ccbench` executable. `args` excludes the program
/// name. Machine output goes to `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ccbench
