#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normord::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kMaxWordLength = 14;
inline constexpr long kMaxBoardCells = 40;
inline constexpr int kMaxTableN = 12;

/// Runs the command line given without the program name, e.g.
/// {"order", "--word", "(YX)^3"}. Returns the process exit code.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normord::cli
