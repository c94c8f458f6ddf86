#pragma once

#include <iosfwd>

namespace dwigner::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvariantFailure = 1,
  kInputError = 2,
  kConsistencyError = 3,
};

/// Entry point of the `dwigner` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dwigner::cli
