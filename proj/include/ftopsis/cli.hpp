#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftopsis::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kInvalidInput = 3,
  kDomainError = 4,
};

/// Runs one command. args excludes the program name. Output goes to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftopsis::cli
