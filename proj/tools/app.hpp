#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace confscale::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kOk = 0, kInfeasible = 1, kUsage = 2 };

/// Entry point behind the `confscale` executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confscale::cli
