#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcd {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitNumeric = 3, kExitIo = 4 };

/// Runs the command line `args` (without the program name). Primary output
/// goes to `out`; failures print one JSON line {"error": {...}} to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcd
