#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revrec::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,  // bad records, flags or configuration
  kIoError = 2,
};

// Runs one invocation. `args` excludes the program name. Every failure writes
// lines starting with "revrec: error[" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revrec::cli
