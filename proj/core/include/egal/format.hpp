#pragma once

#include <charconv>
#include <string>

namespace egal {

/// Locale-independent `%.<digits>g`; used for every number in reports.
inline std::string format_number(double value, int significant_digits = 6)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                           significant_digits);
  return std::string(buf, res.ptr);
}

/// Shortest representation that parses back to the same double.
inline std::string format_exact(double value)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace egal
