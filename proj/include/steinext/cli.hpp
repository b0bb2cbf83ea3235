#pragma once

#include <iosfwd>

namespace steinext {

// Exit codes returned by parse_and_dispatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRing = 3;

// Data goes to `out`, diagnostics and usage text to `err`.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steinext
