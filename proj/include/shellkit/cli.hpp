#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shellkit {

/// Exit codes: 0 when the check holds, 1 when it fails, 2 on usage or input errors.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) against the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shellkit
