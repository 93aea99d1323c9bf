#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgevf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kVerificationFailed = 2;

// args[0] is the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgevf::cli
