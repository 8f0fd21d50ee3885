#pragma once

// Internal locale-independent number/CSV helpers shared by the CSV and JSONL
// readers/writers. Not installed.

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "crossguard/errors.hpp"

namespace crossguard::detail {

/// Shortest round-trip representation (re-parsing yields the same bits).
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline std::string format_double_fixed(double v, int precision) {
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::fixed, precision);
  return std::string(buf, ptr);
}

inline double parse_double(std::string_view text, const std::string& context) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw IoError(context + ": bad number '" + std::string(text) + "'");
  return value;
}

inline long parse_long(std::string_view text, const std::string& context) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw IoError(context + ": bad integer '" + std::string(text) + "'");
  return value;
}

/// Splits on ',' without quoting rules; our CSV fields never contain commas.
inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace crossguard::detail
