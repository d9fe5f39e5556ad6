#pragma once

// Text forms used on the command line: complex literals and
// locale-independent number formatting.

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hypersum/poly.hpp"

namespace hypersum {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline bool parse_real_exact(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return false;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc{} && res.ptr == end && std::isfinite(out);
}
}  // namespace detail

/// Accepts RE, RE+IMi and RE-IMi, e.g. "2", "-0.5", "1.5-0.25i", "1e-3+2i".
/// Whitespace is not allowed anywhere.
inline Complex parse_complex(std::string_view text) {
  auto fail = [&] { return ParseError("malformed complex literal '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  for (char c : text)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') throw fail();

  double re = 0.0, im = 0.0;
  if (text.back() != 'i') {
    if (!detail::parse_real_exact(text, re)) throw fail();
    return {re, 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) throw fail();
  if (!detail::parse_real_exact(body.substr(0, split), re)) throw fail();
  if (!detail::parse_real_exact(body.substr(split), im)) throw fail();
  return {re, im};
}

inline std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

/// Comma-separated complex literals; the empty string is the empty list.
inline std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (auto part : split_commas(text)) out.push_back(parse_complex(part));
  return out;
}

inline std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split_commas(text)) {
    double v = 0.0;
    if (!detail::parse_real_exact(part, v))
      throw ParseError("malformed real number '" + std::string(part) + "'");
    out.push_back(v);
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split_commas(text)) {
    int v = 0;
    const auto* end = part.data() + part.size();
    const auto res = std::from_chars(part.data(), end, v);
    if (part.empty() || res.ec != std::errc{} || res.ptr != end)
      throw ParseError("malformed integer '" + std::string(part) + "'");
    out.push_back(v);
  }
  return out;
}

/// 17 significant digits, '.' separator, independent of the C locale.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

/// Inverse of parse_complex for finite values.
inline std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  if (z.imag() != 0.0) {
    const std::string im = format_double(z.imag());
    out += (im.front() == '-' ? "" : "+") + im + "i";
  }
  return out;
}

}  // namespace hypersum
