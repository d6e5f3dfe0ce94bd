#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace trendrank {

// A lowercase token counted and scored by the pipeline. Never empty, never
// starts with '#' or '@', never looks like a URL.
using Word = std::string;

// Splits tweet text into words. Hashtags, mentions and URLs are dropped;
// surviving tokens lose leading/trailing punctuation and are case-folded.
// Internal punctuation ("no.1", "we're") is kept.
std::vector<Word> tokenize(std::string_view text);

// Number of Unicode scalar values in the whitespace-trimmed text.
std::size_t char_length(std::string_view text);

}  // namespace trendrank
