#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcalp::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;        // success, or YES for solve
inline constexpr int exit_no = 1;        // NO for solve, failures for verify
inline constexpr int exit_usage = 2;     // bad arguments or unreadable input
inline constexpr int exit_internal = 3;  // an internal invariant failed

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vcalp::cli
