#include "trendrank/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdint>
#include <limits>

#include "trendrank/errors.hpp"

namespace trendrank::unicode {

namespace {

struct Decoded {
  char32_t c;
  std::size_t next;
};

// Decodes the scalar at offset; returns a negative code point on error.
int32_t decode_at(std::string_view text, std::size_t offset, std::size_t* next) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = static_cast<int32_t>(offset);
  const int32_t length = static_cast<int32_t>(text.size());
  UChar32 c;
  U8_NEXT(s, i, length, c);
  *next = static_cast<std::size_t>(i);
  return c;
}

Decoded next_scalar(std::string_view text, std::size_t offset) {
  std::size_t next = 0;
  int32_t c = decode_at(text, offset, &next);
  if (c < 0) throw DecodeError(offset);
  return {static_cast<char32_t>(c), next};
}

// Start offset of the scalar ending just before `end`.
std::size_t previous_start(std::string_view text, std::size_t end) {
  std::size_t start = end - 1;
  while (start > 0 && (static_cast<uint8_t>(text[start]) & 0xC0) == 0x80) --start;
  return start;
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

}  // namespace

void validate_utf8(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(std::numeric_limits<int32_t>::max())) {
    throw Error("input larger than 2 GiB is not supported");
  }
  std::size_t offset = 0;
  while (offset < text.size()) {
    if (static_cast<uint8_t>(text[offset]) < 0x80) {
      ++offset;
      continue;
    }
    offset = next_scalar(text, offset).next;
  }
}

bool is_whitespace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool is_punctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

std::size_t codepoint_count(std::string_view text) {
  std::size_t count = 0;
  for (char ch : text) {
    if ((static_cast<uint8_t>(ch) & 0xC0) != 0x80) ++count;
  }
  return count;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size()) {
    auto [c, next] = next_scalar(text, begin);
    if (!is_whitespace(c)) break;
    begin = next;
  }
  std::size_t end = text.size();
  while (end > begin) {
    std::size_t start = previous_start(text, end);
    if (!is_whitespace(next_scalar(text, start).c)) break;
    end = start;
  }
  return text.substr(begin, end - begin);
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t offset = 0;
  std::size_t piece_start = std::string_view::npos;
  while (offset < text.size()) {
    auto [c, next] = next_scalar(text, offset);
    if (is_whitespace(c)) {
      if (piece_start != std::string_view::npos) {
        pieces.push_back(text.substr(piece_start, offset - piece_start));
        piece_start = std::string_view::npos;
      }
    } else if (piece_start == std::string_view::npos) {
      piece_start = offset;
    }
    offset = next;
  }
  if (piece_start != std::string_view::npos) pieces.push_back(text.substr(piece_start));
  return pieces;
}

bool contains_whitespace(std::string_view text) {
  std::size_t offset = 0;
  while (offset < text.size()) {
    auto [c, next] = next_scalar(text, offset);
    if (is_whitespace(c)) return true;
    offset = next;
  }
  return false;
}

std::string_view strip_punctuation(std::string_view text, bool leading, bool trailing) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  if (leading) {
    while (begin < end) {
      auto [c, next] = next_scalar(text, begin);
      if (!is_punctuation(c)) break;
      begin = next;
    }
  }
  if (trailing) {
    while (end > begin) {
      std::size_t start = previous_start(text, end);
      if (!is_punctuation(next_scalar(text, start).c)) break;
      end = start;
    }
  }
  return text.substr(begin, end - begin);
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t offset = 0;
  while (offset < text.size()) {
    auto [c, next] = next_scalar(text, offset);
    append_utf8(out, static_cast<char32_t>(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT)));
    offset = next;
  }
  return out;
}

}  // namespace trendrank::unicode
