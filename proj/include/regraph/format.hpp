#pragma once

#include <string>
#include <vector>

namespace regraph {

/// Renders a real with exactly 12 significant digits in positional
/// notation (trailing zeros kept), integers bare, infinities as "inf".
/// Stable across runs; parsing the output and re-rendering reproduces
/// the same bytes.
std::string format_real(double x);

/// Joins formatted values with ", " (used by the human table output).
std::string format_tuple(const std::vector<double>& values);

/// JSON array of formatted numbers; infinities become the string "inf".
std::string json_array(const std::vector<double>& values);

/// JSON scalar: bare number, or "inf"/"-inf" quoted.
std::string json_number(double x);

} // namespace regraph
