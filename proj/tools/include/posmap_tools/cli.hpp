#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace posmap::tools {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNegative = 2,
  kExitDisagreement = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posmap::tools
