#pragma once

#include <istream>
#include <ostream>

namespace ontosearch {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidKb = 2,
  kExitQueryFailed = 3,
};

/// Runs `ontosearch <validate|query|repl|perf|serve> ...`. Results go to `out`,
/// diagnostics to `err`; `repl` reads queries from `in` until end of input.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ontosearch
