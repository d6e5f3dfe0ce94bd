#include "trendrank/freq_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trendrank/errors.hpp"

namespace trendrank {

void FrequencyIndex::add(const Word& word, double weight) {
  masses_[word] += weight;
  total_mass_ += weight;
}

void FrequencyIndex::scale(double factor) {
  if (factor == 1.0) return;
  double pruned = 0.0;
  for (auto it = masses_.begin(); it != masses_.end();) {
    it->second *= factor;
    if (it->second < kPruneThreshold) {
      pruned += it->second;
      it = masses_.erase(it);
    } else {
      ++it;
    }
  }
  total_mass_ = masses_.empty() ? 0.0 : std::max(0.0, total_mass_ * factor - pruned);
}

double FrequencyIndex::mass(const Word& word) const {
  auto it = masses_.find(word);
  return it == masses_.end() ? 0.0 : it->second;
}

std::vector<std::pair<Word, double>> FrequencyIndex::sorted_by_mass() const {
  std::vector<std::pair<Word, double>> entries(masses_.begin(), masses_.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return entries;
}

FrequencyIndex build_frequency_index(std::span<const Tweet> tweets) {
  FrequencyIndex index;
  for (const Tweet& tweet : tweets) {
    for (const Word& word : tokenize(tweet.text)) index.add(word);
  }
  return index;
}

FrequencyIndex build_frequency_index(const SampleSpace& ss) { return build_frequency_index(ss.tweets); }

double relative_frequency(const FrequencyIndex& index, const Word& word) {
  if (!(index.total_mass() > 0.0)) throw EmptyIndexError();
  return index.mass(word) / index.total_mass();
}

DecayConfig learning_index(double t, double n, int f) {
  if (!(t > 0.0) || !(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("learning index needs positive finite t and n");
  }
  if (t > n) throw DomainError("learning index needs t <= n");
  if (f < 1) throw DomainError("learning index needs f >= 1");
  return DecayConfig{t, n, f, std::pow(t / n, 1.0 / static_cast<double>(f))};
}

FrequencyIndex decay_update(const FrequencyIndex& index, std::span<const Tweet> new_batch, double li) {
  if (!(li > 0.0 && li <= 1.0)) throw DomainError("learning index must lie in (0, 1]");
  FrequencyIndex updated = index;
  updated.scale(li);
  for (const Tweet& tweet : new_batch) {
    for (const Word& word : tokenize(tweet.text)) updated.add(word);
  }
  return updated;
}

double top_k_contribution(const FrequencyIndex& index, std::size_t k) {
  if (k == 0) throw DomainError("k must be positive");
  if (!(index.total_mass() > 0.0)) throw EmptyIndexError();
  if (k >= index.distinct_words()) return 1.0;
  auto entries = index.sorted_by_mass();
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += entries[i].second;
  return std::min(1.0, sum / index.total_mass());
}

std::vector<HistogramEntry> frequency_histogram(const FrequencyIndex& index) {
  std::vector<HistogramEntry> rows;
  if (index.empty()) return rows;
  auto entries = index.sorted_by_mass();
  rows.reserve(entries.size());
  double running = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    running += entries[i].second;
    rows.push_back({i + 1, entries[i].first, entries[i].second, running / index.total_mass()});
  }
  return rows;
}

}  // namespace trendrank
