#pragma once

// Line splitting shared by the design and graph file parsers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace bibdopt::detail {

struct NumberedLine {
  int number;  // 1-based line number in the file
  std::string_view text;
};

/// Non-blank lines that do not start with '#', trimmed.
inline std::vector<NumberedLine> content_lines(std::string_view text) {
  std::vector<NumberedLine> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline bool parse_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

inline std::string at_line(int number) { return "line " + std::to_string(number) + ": "; }

}  // namespace bibdopt::detail
