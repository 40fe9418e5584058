#pragma once

#include <istream>
#include <ostream>

namespace twodist {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,   // a validity, conservation or coloring check failed
    kExitUsage = 2,         // bad flags, unreadable or malformed input
    kExitFalsified = 3,     // no configuration found, or no color left while extending
};

/// Entry point of the `twodist` tool. `--in -` reads from `in`; JSON lines
/// go to `out`, logs to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twodist
