#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twinless::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kParseError = 2,
  kPreconditionViolation = 3,
  kSelfTestFailed = 4,
};

// Runs one command line. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`; `in` is read when --input is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twinless::cli
