#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace seqstate::detail {

// Shortest round-trippable decimal; output is locale-independent.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Prefer a shorter form when it parses back to the same value.
  for (int precision = 6; precision < 17; ++precision) {
    char shorter[40];
    std::snprintf(shorter, sizeof shorter, "%.*g", precision, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

}  // namespace seqstate::detail
