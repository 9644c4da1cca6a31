#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dessins::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoncongruence = 1;
inline constexpr int kParseError = 2;
inline constexpr int kInvariantViolation = 3;
inline constexpr int kBudgetExceeded = 4;

// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dessins::cli
