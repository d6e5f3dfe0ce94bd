#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "trendrank/corpus.hpp"
#include "trendrank/freq_engine.hpp"
#include "trendrank/lexicon.hpp"

namespace trendrank {

// Length budget used by the length-normalized score. The numerator of the
// normalization is the tweet's character count clamped to this value.
inline constexpr std::size_t kMaxTweetChars = 140;

struct TweetScore {
  std::size_t tweet_position = 0;
  double raw_score = 0.0;         // sum of relative frequencies of non-filter tokens
  std::size_t cn_count = 0;       // tokens found in the common-word lexicon
  bool all_common = false;        // cn_count == token_count (true for zero tokens)
  double normalized_score = 0.0;  // raw_score * min(char_count, 140) / 140
  std::size_t token_count = 0;
  std::size_t char_count = 0;
};

struct RankedEntry {
  std::size_t rank = 0;
  TweetScore score;
  Tweet tweet;
};

// Sorted by the active score descending, ties by ascending corpus position.
// Rank 1 is the most eligible tweet.
struct RankedList {
  std::vector<RankedEntry> entries;
};

// Throws EmptyIndexError when the index holds no mass.
TweetScore score_tweet(const Tweet& tweet, const FrequencyIndex& index, const Lexicon& filter_lex,
                       const Lexicon& cn_lex);

double normalize_score(double raw_score, std::size_t char_count);

// Throws EmptyInputError for an empty tweet list.
RankedList rank_tweets(std::span<const Tweet> tweets, const FrequencyIndex& index,
                       const Lexicon& filter_lex, const Lexicon& cn_lex, bool use_normalized);
RankedList rank_tweets(const SampleSpace& ss, const FrequencyIndex& index, const Lexicon& filter_lex,
                       const Lexicon& cn_lex, bool use_normalized);

}  // namespace trendrank
