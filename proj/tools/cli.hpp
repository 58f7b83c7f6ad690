#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetdim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kParse = 2;
inline constexpr int kVerifyFailed = 3;
inline constexpr int kCapExceeded = 4;
inline constexpr int kBadParams = 5;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace posetdim::cli
