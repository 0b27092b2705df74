#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frechet::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNotConverged = 2,  // also: selfcheck failure
  kIoError = 3,
};

/// Runs the tool on `args` (program name excluded). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frechet::cli
