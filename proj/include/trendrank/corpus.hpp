#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace trendrank {

// A hashtag name: case-folded, without the leading '#', never empty and
// never containing whitespace.
struct TrendTag {
  std::string name;

  auto operator<=>(const TrendTag&) const = default;
};

// Normalizes a raw hashtag ("#Winners!", "winners") into a tag. Returns an
// empty name when nothing is left.
TrendTag make_tag(std::string_view raw);

struct Tweet {
  std::string text;
  std::set<TrendTag> tags;
  std::size_t position = 0;

  bool has_tag(const TrendTag& tag) const { return tags.contains(tag); }
  bool operator==(const Tweet&) const = default;
};

// The tweets under analysis. Duplicates are expected after trend
// association.
struct SampleSpace {
  std::vector<Tweet> tweets;
  TrendTag highest_tag;
  std::vector<TrendTag> trend_tags;

  std::size_t n() const { return tweets.size(); }
};

inline constexpr std::string_view kDefaultSeparator = "%%";

// Extracts the hashtags of a text.
std::set<TrendTag> extract_tags(std::string_view text);

// Splits raw corpus text on lines consisting solely of `separator` (after
// trimming). Segments are trimmed, empty ones dropped, positions assigned
// in order. Throws DecodeError on ill-formed UTF-8.
std::vector<Tweet> parse_corpus(std::string_view raw_text,
                                std::string_view separator = kDefaultSeparator);

// One JSON object per line: {"text": "...", "tags": ["...", ...]}. Blank
// lines are skipped. Listed tags must occur as hashtags in the text.
std::vector<Tweet> parse_corpus_jsonl(std::string_view raw_text);

// Trend association: every retrieved tweet carrying `highest` is added,
// then for each tag in `trends` every tweet carrying that tag is added
// again. Entries get fresh sequential positions.
SampleSpace prepare_sample_space(const std::vector<Tweet>& retrieved, const TrendTag& highest,
                                 const std::vector<TrendTag>& trends);

// One tag per line, '#' optional, "# " starts a comment. The first tag is
// the highest trending one. Throws FormatError on duplicates or no tags.
std::vector<TrendTag> load_trends(std::string_view raw_text);

// Reads a whole file; throws IoError naming the path on failure.
std::string read_file(const std::string& path);

}  // namespace trendrank
