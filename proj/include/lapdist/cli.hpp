#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapdist::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the lapdist tool. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`; returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lapdist::cli
