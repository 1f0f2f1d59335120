#pragma once

#include <cstdio>
#include <string>

namespace sglight {

/// Fixed 12-significant-digit rendering used by every CSV and report writer.
inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Shortest exact rendering; used where text must round-trip to the same double.
inline std::string fmt_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace sglight
