#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcs {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPropertyFailure = 2;
inline constexpr int kExitInconclusive = 3;

/**
 * Runs one CLI invocation in-process.  `args` are the program arguments
 * without the executable name.  All regular output goes to `out`, usage and
 * input errors to `err`; identical invocations produce identical output.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcs
