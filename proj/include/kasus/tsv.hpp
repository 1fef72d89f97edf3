#pragma once

// Shared plumbing for the tab-separated file formats: error types carrying
// line numbers, field splitting, and exact decimal rendering of count ratios.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kasus {

// Malformed content in an input file. Carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structurally valid input that violates a cross-file contract
// (e.g. decisions and gold rows that do not align).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file that cannot be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

inline std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t value = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path);
}

// Renders num/den with a fixed number of decimals, rounding half to even.
// Works on the exact integers, so ties like 0.125 -> 0.12 / 0.375 -> 0.38
// come out the same on every platform. den == 0 renders as zero.
inline std::string format_ratio(std::uint64_t num, std::uint64_t den,
                                unsigned decimals) {
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < decimals; ++i) scale *= 10;
  std::uint64_t q = 0;
  if (den != 0) {
    std::uint64_t scaled = num * scale;
    q = scaled / den;
    std::uint64_t r = scaled % den;
    if (2 * r > den || (2 * r == den && (q & 1) != 0)) ++q;
  }
  if (decimals == 0) return std::to_string(q);
  std::string frac = std::to_string(q % scale);
  frac.insert(frac.begin(), decimals - frac.size(), '0');
  return std::to_string(q / scale) + "." + frac;
}

// num/den as a percentage with two decimals.
inline std::string format_percent(std::uint64_t num, std::uint64_t den) {
  return format_ratio(num * 100, den, 2);
}

}  // namespace kasus
