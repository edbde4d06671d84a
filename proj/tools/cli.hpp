#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricci_orbit::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,
  kHalted = 3,
  kSizeLimit = 4,
};

// Runs the tool on args (args[0] is the program name) and returns the exit
// code. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ricci_orbit::cli
