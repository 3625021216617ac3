#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmodal::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed_check = 1;
inline constexpr int exit_usage = 2;

/// Runs one subcommand. `args` excludes the program name. Permutations are
/// read from `in` when no --input is given; results go to `out` unless --out
/// names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Parses "3", "1..4", "1,2,5" or mixtures such as "1..3,8".
std::vector<std::size_t> parse_range(const std::string& text);

} // namespace kmodal::cli
