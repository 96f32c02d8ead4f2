#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace expmde::cli {

/// %.17g, which round-trips every double. Non-finite values are spelled
/// nan, inf and -inf on every platform.
inline std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace expmde::cli
