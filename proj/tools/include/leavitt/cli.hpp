#pragma once

#include <ostream>

namespace leavitt {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
};

/// Runs the driver on argv. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leavitt
