#ifndef HAMPLANE_SRC_TEXT_LINES_HPP
#define HAMPLANE_SRC_TEXT_LINES_HPP

#include <charconv>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hamplane/graph.hpp"

namespace hamplane {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

// Calls f(line, lineno) for each line that is non-blank after removing a
// '#' comment. lineno is 1-based.
template <typename F>
void for_each_data_line(std::string_view text, F&& f) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) f(line, lineno);
  }
}

inline std::optional<std::string_view> first_data_line(std::string_view text) {
  std::optional<std::string_view> out;
  for_each_data_line(text, [&](std::string_view line, std::size_t) {
    if (!out) out = line;
  });
  return out;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint32_t parse_label(std::string_view token, std::size_t lineno) {
  std::uint32_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw GraphError("expected a non-negative integer, got '" + std::string(token) + "'", lineno);
  }
  return value;
}

}  // namespace hamplane

#endif  // HAMPLANE_SRC_TEXT_LINES_HPP
