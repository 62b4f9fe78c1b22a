#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace insider {

/// Exit codes of the command-line tool.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace insider
