#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncycle::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kIoFailure = 3,
  kDegenerate = 4,
  kVerificationFailed = 5,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncycle::cli
