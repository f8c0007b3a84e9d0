#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace akizuki::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kParseError = 2,
  kSelftestFailure = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace akizuki::cli
