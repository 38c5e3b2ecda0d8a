#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace markov::cli {

/// Exit codes: analysis completed, a checked property failed, bad input.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one subcommand. `args` excludes the program name; a file argument
/// of "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace markov::cli
