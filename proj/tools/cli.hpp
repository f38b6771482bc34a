#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thetalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIdentity = 3;
inline constexpr int kExitCap = 4;

/// Runs the command line `args` (without the program name). Returns the exit
/// code; normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,3,4" -> {1,3,4}; "" -> {}. Rejects junk, duplicates and values outside
/// [0, k-1] with std::invalid_argument.
std::vector<int> parse_L(const std::string& text, int k);

}  // namespace thetalab::cli
