#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amt::cli {

// Exit codes: 0 success, 1 invalid input (file, parse or domain error),
// 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amt::cli
