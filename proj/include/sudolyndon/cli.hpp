#pragma once

#include <ostream>
#include <span>
#include <string>

namespace sudolyndon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // e.g. no solution, with --strict
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sudolyndon::cli
