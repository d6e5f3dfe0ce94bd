#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers shared by the corpus, tokenizer and lexicon modules.
namespace trendrank::unicode {

// Throws DecodeError naming the first ill-formed byte.
void validate_utf8(std::string_view text);

bool is_whitespace(char32_t c);
bool is_punctuation(char32_t c);

// Number of scalar values; text must be valid UTF-8.
std::size_t codepoint_count(std::string_view text);

// Strips leading and trailing Unicode whitespace.
std::string_view trim(std::string_view text);

// Splits on runs of Unicode whitespace, dropping empty pieces.
std::vector<std::string_view> split_whitespace(std::string_view text);

bool contains_whitespace(std::string_view text);

// Strips leading and/or trailing characters of general category P*.
std::string_view strip_punctuation(std::string_view text, bool leading = true,
                                   bool trailing = true);

// Simple (1:1) Unicode case folding.
std::string fold_case(std::string_view text);

}  // namespace trendrank::unicode
