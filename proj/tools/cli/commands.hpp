#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expmde::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Parses "a,b,c" or "start:stop:step" (inclusive of stop up to rounding).
std::vector<double> parse_real_list(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace expmde::cli
