#pragma once

#include <string>

namespace wfriend {

/// Rounds to `digits` significant digits; values below 1e-14 in magnitude
/// (and negative zero) become 0 so that round-off noise never reaches output.
double round_significant(double value, int digits = 12);

/// "%.*g" of the rounded value.
std::string format_significant(double value, int digits = 12);

}  // namespace wfriend
