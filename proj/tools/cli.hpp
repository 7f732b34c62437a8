#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padiccf::cli {

// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kViolated = 1,     // check: condition fails; sqrt: no square root in Q_p
  kBadInput = 2,     // malformed flags or arguments
  kTruncated = 3,    // expand: step budget exhausted
};

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padiccf::cli
