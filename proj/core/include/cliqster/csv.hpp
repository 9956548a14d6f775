#pragma once

#include <charconv>
#include <cmath>
#include <span>
#include <string>
#include <string_view>

namespace cliqster {

/// Decimal rendering with 6 significant digits, locale-independent.
/// NaN renders as an empty cell.
inline std::string format_double(double v) {
  if (std::isnan(v)) return {};
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

/// Minimal CSV quoting: cells containing a comma, quote or newline are
/// wrapped and inner quotes doubled.
inline std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_row(std::span<const std::string> cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  out += '\n';
  return out;
}

}  // namespace cliqster
