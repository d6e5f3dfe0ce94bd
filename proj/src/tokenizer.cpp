#include "trendrank/tokenizer.hpp"

#include "trendrank/unicode.hpp"

namespace trendrank {

namespace {

bool starts_with_ascii_ci(std::string_view text, std::string_view prefix) {
  if (text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = text[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

bool looks_like_url(std::string_view token) {
  return token.find("://") != std::string_view::npos || starts_with_ascii_ci(token, "www.");
}

}  // namespace

std::vector<Word> tokenize(std::string_view text) {
  std::vector<Word> words;
  for (std::string_view token : unicode::split_whitespace(text)) {
    if (token.front() == '#' || token.front() == '@') continue;
    if (looks_like_url(token)) continue;
    std::string_view core = unicode::strip_punctuation(token);
    // "(www.example.com)" only reveals itself once the bracket is gone.
    if (core.empty() || looks_like_url(core)) continue;
    words.push_back(unicode::fold_case(core));
  }
  return words;
}

std::size_t char_length(std::string_view text) {
  return unicode::codepoint_count(unicode::trim(text));
}

}  // namespace trendrank
