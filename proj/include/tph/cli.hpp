#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tph::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,      // internal failure or degenerate symbol
  kBadInput = 2,      // not a matching pair, malformed symbol or arcs, usage error
  kNotFredholm = 3,   // subordinated pair not Fredholm
  kOracleFailed = 4,  // finite sections still disagree at 4N
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tph::cli
