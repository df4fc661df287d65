#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace colmah {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitLimit = 3,  // size cap or formula domain
};

// Runs one command line (without the program name). All output goes to the
// given streams, so the whole front end is testable in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colmah
