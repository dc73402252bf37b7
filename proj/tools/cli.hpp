#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extel::cli {

enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kUsage = 2,
  kDomain = 3,
  kIo = 4,
};

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kOutDirEnv = "EXTEL_OUT_DIR";

/// Runs one subcommand. args excludes the program name. Written file paths go
/// to `out`, one per line; a failure prints a single JSON line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extel::cli
