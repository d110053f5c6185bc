#pragma once

#include <ostream>

namespace zj {

// Exit codes of the command-line frontend.
enum ExitCode {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUnknownCommand = 2,
  kExitInvalidArguments = 3,
  kExitComputation = 4,
  kExitTolerance = 5,
};

// Runs one command. Results go to `out`, timings and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zj
