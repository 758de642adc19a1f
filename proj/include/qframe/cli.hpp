#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qframe::cli {

inline constexpr const char* kToolName = "qframe";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kMathFailure = 1,  // not a frame, hypothesis fails, inconsistent verdict, residual too large
  kUsageError = 2,   // bad flags, unreadable or invalid files, guarded parameter errors
};

/// Runs the tool with `args` (excluding the program name); reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qframe::cli
