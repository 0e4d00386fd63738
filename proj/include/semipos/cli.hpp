#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semipos::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kInputError = 64;
inline constexpr int kInternalError = 70;

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semipos::cli
