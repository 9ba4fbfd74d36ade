#include "cascade/format.hpp"

#include <charconv>
#include <cmath>

namespace cascade {

std::string format_fixed(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
  std::string out(buf, res.ptr);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_fixed(const std::optional<double>& value, int decimals) {
  return value ? format_fixed(*value, decimals) : std::string{};
}

std::string format_shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, res.ptr};
}

}  // namespace cascade
