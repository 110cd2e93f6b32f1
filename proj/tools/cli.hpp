#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hball::cli {

// Exit codes: 0 ok, 1 violation or failed check, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hball::cli
