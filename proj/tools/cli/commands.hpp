#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catmod2::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catmod2::cli
