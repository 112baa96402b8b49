#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace insdel {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitBudget = 2,
  kExitVerification = 3,
  kExitUsage = 64,
};

/// Runs the `insdel` command line; args excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace insdel
