#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ejnf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNotRepresentable = 2,
  kVerificationFailed = 3,
};

/// Runs one command line. args[0] is the program name. Structured output goes
/// to `out`, diagnostics to `err`; `in` is read when the matrix path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ejnf::cli
