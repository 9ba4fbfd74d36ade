#pragma once

#include <optional>
#include <string>

namespace cascade {

// Locale-independent fixed notation, e.g. format_fixed(0.731, 6) == "0.731000".
// Negative zero prints as "0.000000".
std::string format_fixed(double value, int decimals = 6);

// Empty string for a missing value.
std::string format_fixed(const std::optional<double>& value, int decimals = 6);

// Shortest text that parses back to the same double.
std::string format_shortest(double value);

}  // namespace cascade
