#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgq::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kBudget = 2,
  kUsage = 64,
  kParse = 65,
  kIo = 74,
};

/// Runs `lgq <args...>` (args excludes the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_command(int argc, char** argv);

}  // namespace lgq::cli
