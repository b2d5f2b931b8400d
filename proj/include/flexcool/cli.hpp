#pragma once

#include <ostream>

namespace flexcool {

// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitConfig = 2,
    kExitUnstable = 3,
    kExitIo = 4,
};

// Entry point behind the flexcool executable. Verbs:
//   simulate | sweep | scenario | check-stability | dump-matrices
// Results go to `out` (or --output), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flexcool
