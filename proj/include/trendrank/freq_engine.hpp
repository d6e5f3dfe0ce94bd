#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trendrank/corpus.hpp"
#include "trendrank/tokenizer.hpp"

namespace trendrank {

// Masses below this are dropped after a decay step.
inline constexpr double kPruneThreshold = 1e-9;

// Word -> mass table plus the running total. Masses are token counts until
// a decay update makes them fractional. The relative frequency of a word
// is mass / total_mass.
class FrequencyIndex {
 public:
  void add(const Word& word, double weight = 1.0);

  // Multiplies every mass and the total by `factor`, then prunes masses
  // below kPruneThreshold.
  void scale(double factor);

  double mass(const Word& word) const;
  double total_mass() const { return total_mass_; }
  std::size_t distinct_words() const { return masses_.size(); }
  bool empty() const { return masses_.empty(); }
  const std::unordered_map<Word, double>& masses() const { return masses_; }

  // (word, mass) pairs, mass descending, ties by word ascending.
  std::vector<std::pair<Word, double>> sorted_by_mass() const;

  bool operator==(const FrequencyIndex&) const = default;

 private:
  std::unordered_map<Word, double> masses_;
  double total_mass_ = 0.0;
};

struct DecayConfig {
  double t = 1.0;   // residual contribution of the old data after f batches
  double n = 1.0;   // current contribution of the old data
  int f = 1;        // number of incoming batches
  double li = 1.0;  // learning index, (t/n)^(1/f)
};

struct HistogramEntry {
  std::size_t rank = 0;
  Word word;
  double mass = 0.0;
  double cumulative_fraction = 0.0;
};

// Counts every token of every tweet (duplicates included). Lexicons play no
// part here.
FrequencyIndex build_frequency_index(std::span<const Tweet> tweets);
FrequencyIndex build_frequency_index(const SampleSpace& ss);

// mass / total_mass, 0 for absent words. Throws EmptyIndexError.
double relative_frequency(const FrequencyIndex& index, const Word& word);

// Throws DomainError unless 0 < t <= n and f >= 1.
DecayConfig learning_index(double t, double n, int f);

// Scales all old masses (seen in the batch or not) and the total by li,
// then adds one unit per token of the new batch. Throws DomainError unless
// 0 < li <= 1.
FrequencyIndex decay_update(const FrequencyIndex& index, std::span<const Tweet> new_batch, double li);

// Share of the total mass held by the k heaviest words. Throws DomainError
// for k == 0 and EmptyIndexError for an empty index.
double top_k_contribution(const FrequencyIndex& index, std::size_t k);

// Rank/frequency table behind the "number of words vs frequency" plot.
std::vector<HistogramEntry> frequency_histogram(const FrequencyIndex& index);

}  // namespace trendrank
