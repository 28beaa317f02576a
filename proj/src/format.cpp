#include "wfriend/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace wfriend {

double round_significant(double value, int digits) {
  if (!std::isfinite(value)) return value;
  if (std::abs(value) < 1e-14) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, round_significant(value, digits));
  return buf;
}

}  // namespace wfriend
