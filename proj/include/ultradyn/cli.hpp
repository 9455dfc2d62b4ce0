#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ultradyn::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kInternal = 4,
};

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultradyn::cli
