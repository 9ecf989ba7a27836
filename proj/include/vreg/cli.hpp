#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vreg::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // search not found or suite failure
  kInvalidInput = 2,  // bad arguments, unknown command, caps, width limits
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vreg::cli
