#pragma once

#include <ostream>

namespace cpn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitDimension = 3,
  kExitIo = 4,
};

/// Entry point of the `cpn` command-line tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpn::cli
