#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nudcode::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_unknown = 3;
inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;
inline constexpr int exit_internal = 70;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nudcode::cli
