#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratball::cli {

enum ExitCode : int { ok = 0, usage = 1, limit = 2, internal = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratball::cli
