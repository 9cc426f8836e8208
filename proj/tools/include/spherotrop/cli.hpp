#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spherotrop::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kPrecisionLoss = 3,
  kCheckFailed = 4,
};

/// Runs one invocation; `args` excludes the program name. Results go to
/// `out`, diagnostics to `err` as JSON lines.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spherotrop::cli
