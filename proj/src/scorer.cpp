#include "trendrank/scorer.hpp"

#include <algorithm>
#include <numeric>

#include "trendrank/errors.hpp"
#include "trendrank/tokenizer.hpp"

namespace trendrank {

TweetScore score_tweet(const Tweet& tweet, const FrequencyIndex& index, const Lexicon& filter_lex,
                       const Lexicon& cn_lex) {
  if (!(index.total_mass() > 0.0)) throw EmptyIndexError();

  TweetScore score;
  score.tweet_position = tweet.position;
  const std::vector<Word> words = tokenize(tweet.text);
  score.token_count = words.size();
  for (const Word& word : words) {
    if (!filter_lex.contains(word)) score.raw_score += relative_frequency(index, word);
    if (cn_lex.contains(word)) ++score.cn_count;
  }
  score.all_common = score.cn_count == score.token_count;
  score.char_count = char_length(tweet.text);
  score.normalized_score = normalize_score(score.raw_score, score.char_count);
  return score;
}

double normalize_score(double raw_score, std::size_t char_count) {
  const std::size_t clamped = std::min(char_count, kMaxTweetChars);
  return raw_score * (static_cast<double>(clamped) / static_cast<double>(kMaxTweetChars));
}

RankedList rank_tweets(std::span<const Tweet> tweets, const FrequencyIndex& index,
                       const Lexicon& filter_lex, const Lexicon& cn_lex, bool use_normalized) {
  if (tweets.empty()) throw EmptyInputError();

  std::vector<TweetScore> scores;
  scores.reserve(tweets.size());
  for (const Tweet& tweet : tweets) scores.push_back(score_tweet(tweet, index, filter_lex, cn_lex));

  std::vector<std::size_t> order(tweets.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    return use_normalized ? scores[i].normalized_score : scores[i].raw_score;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key(a) != key(b)) return key(a) > key(b);
    if (tweets[a].position != tweets[b].position) return tweets[a].position < tweets[b].position;
    return a < b;
  });

  RankedList ranked;
  ranked.entries.reserve(order.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    ranked.entries.push_back({rank + 1, scores[order[rank]], tweets[order[rank]]});
  }
  return ranked;
}

RankedList rank_tweets(const SampleSpace& ss, const FrequencyIndex& index, const Lexicon& filter_lex,
                       const Lexicon& cn_lex, bool use_normalized) {
  return rank_tweets(std::span<const Tweet>(ss.tweets), index, filter_lex, cn_lex, use_normalized);
}

}  // namespace trendrank
