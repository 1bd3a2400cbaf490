#pragma once

#include <iosfwd>

namespace mactc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitInvalid = 2;

// Entry point of the mactc tool. Results go to out, messages to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mactc
