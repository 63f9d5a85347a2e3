#pragma once

#include <iosfwd>

namespace gammacop {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitConvergence = 4,
  kExitValidationFail = 5,
};

/// Run `gammacop` with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gammacop
