#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thinfilm {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotConverged = 2,
  kExitIo = 3,
};

/// Entry point of the `thinfilm` tool; `args` excludes the program name.
/// Results go to `out` (or --out PATH), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thinfilm
