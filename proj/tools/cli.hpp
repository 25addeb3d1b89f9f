#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlet::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

// Runs one subcommand. `args` excludes the program name; "-" as a file
// argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace circlet::cli
