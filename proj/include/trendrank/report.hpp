#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trendrank/freq_engine.hpp"
#include "trendrank/scorer.hpp"

namespace trendrank {

struct TopWord {
  Word word;
  double mass = 0.0;
  double relative_frequency = 0.0;
};

struct RankedTweetRow {
  std::size_t rank = 0;
  double raw_score = 0.0;
  double normalized_score = 0.0;
  bool all_common = false;
  std::string text;
};

struct Report {
  std::string trend_name;
  std::size_t tweet_count = 0;
  std::size_t distinct_words = 0;
  double total_mass = 0.0;
  std::vector<TopWord> top_words;
  std::vector<RankedTweetRow> ranked_tweets;
};

enum class OutputFormat { Text, Json };

// Keeps the top_k heaviest words and the top_k ranked tweets.
Report make_report(std::string trend_name, const FrequencyIndex& index, const RankedList& ranked,
                   std::size_t top_k);

// Fixed notation, at most 9 fractional digits, trailing zeros trimmed.
std::string format_real(double value);

// Shortest decimal that parses back to exactly `value`.
std::string format_real_exact(double value);

// Text mirrors the classic "Word / Frequency" table followed by the most
// eligible tweet and the ranking. Json is a single object whose keys follow
// the Report field order.
std::string emit_report(const Report& report, OutputFormat format);

// Header `rank,word,mass,cumulative_fraction`, one row per histogram entry.
std::string histogram_csv(const FrequencyIndex& index);

// Writes histogram_csv to `path`; throws IoError if it cannot be written.
void emit_histogram_csv(const FrequencyIndex& index, const std::string& path);

}  // namespace trendrank
