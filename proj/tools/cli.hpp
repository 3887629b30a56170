#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burau::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kNonConvergence = 3,
};

/// Runs the burau command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burau::cli
