#pragma once

#include <iosfwd>

namespace pwz::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or unsupported input.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pwz::cli
