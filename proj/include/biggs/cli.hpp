#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biggs {

/// Exit statuses of dispatch().
enum ExitCode : int {
  kExitOk = 0,
  kExitParameter = 1,
  kExitCapacity = 2,
  kExitContradiction = 3,
};

/// Runs one command line (without the program name). The document goes to
/// `out` (or to --out), diagnostics and usage text to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biggs
