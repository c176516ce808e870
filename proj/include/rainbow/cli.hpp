#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainbow::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int search_limit = 2;
inline constexpr int parse_failure = 64;
inline constexpr int precondition = 65;
inline constexpr int internal = 70;
} // namespace exit_code

/// Runs one subcommand. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rainbow::cli
