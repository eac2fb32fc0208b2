#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sinest::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoise = 2;  // screening rejected the input

/// Environment variable naming the directory for default and relative output paths.
inline constexpr const char* kOutputDirEnv = "SINEST_OUTPUT_DIR";

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Diagnostics go to `err`; anything written to "-" goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sinest::cli
