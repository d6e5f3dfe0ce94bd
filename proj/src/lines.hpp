#pragma once

#include <cstddef>
#include <string_view>

#include "trendrank/unicode.hpp"

namespace trendrank::detail {

// A line is a comment if it is exactly "#" or starts with "# ".
inline bool is_comment_line(std::string_view line) {
  return line == "#" || line.starts_with("# ") || line.starts_with("#\t");
}

// Calls fn(trimmed_line, line_number) for every non-empty, non-comment line.
template <typename Fn>
void for_each_content_line(std::string_view raw_text, Fn&& fn) {
  std::size_t line_number = 0;
  std::size_t begin = 0;
  while (begin <= raw_text.size()) {
    std::size_t end = raw_text.find('\n', begin);
    if (end == std::string_view::npos) end = raw_text.size();
    ++line_number;
    std::string_view line = unicode::trim(raw_text.substr(begin, end - begin));
    if (!line.empty() && !is_comment_line(line)) fn(line, line_number);
    begin = end + 1;
  }
}

}  // namespace trendrank::detail
