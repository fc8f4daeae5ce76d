#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su2b::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su2b::cli
