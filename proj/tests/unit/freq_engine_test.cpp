#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/random_corpus.hpp"
#include "trendrank/errors.hpp"
#include "trendrank/freq_engine.hpp"

using namespace trendrank;
using trendrank::testing::tweets_from;

namespace {

const std::vector<std::string> kCorpusA = {"the match was great", "great match today", "great goals"};

std::vector<double> masses_of(const FrequencyIndex& index) {
  std::vector<double> out;
  for (const auto& [w, m] : index.masses()) out.push_back(m);
  return out;
}

}  // namespace

TEST(BuildIndexTest, CorpusA) {
  FrequencyIndex index = build_frequency_index(tweets_from(kCorpusA));
  EXPECT_EQ(index.total_mass(), 9.0);
  EXPECT_EQ(index.distinct_words(), 6u);
  EXPECT_EQ(index.mass("the"), 1.0);
  EXPECT_EQ(index.mass("match"), 2.0);
  EXPECT_EQ(index.mass("was"), 1.0);
  EXPECT_EQ(index.mass("great"), 3.0);
  EXPECT_EQ(index.mass("today"), 1.0);
  EXPECT_EQ(index.mass("goals"), 1.0);
}

TEST(BuildIndexTest, SingleWordAndEmpty) {
  FrequencyIndex single = build_frequency_index(tweets_from({"word"}));
  EXPECT_EQ(single.total_mass(), 1.0);
  EXPECT_EQ(single.mass("word"), 1.0);
  FrequencyIndex empty = build_frequency_index(std::vector<Tweet>{});
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.total_mass(), 0.0);
}

TEST(BuildIndexTest, CountsDuplicatedTweets) {
  SampleSpace ss = prepare_sample_space(tweets_from({"go #a"}), TrendTag{"a"}, {TrendTag{"a"}});
  EXPECT_EQ(build_frequency_index(ss).mass("go"), 2.0);
}

TEST(RelativeFrequencyTest, Values) {
  FrequencyIndex index = build_frequency_index(tweets_from(kCorpusA));
  EXPECT_DOUBLE_EQ(relative_frequency(index, "great"), 3.0 / 9.0);
  EXPECT_EQ(relative_frequency(index, "absent"), 0.0);
  EXPECT_EQ(relative_frequency(build_frequency_index(tweets_from({"word"})), "word"), 1.0);
  EXPECT_THROW(relative_frequency(FrequencyIndex{}, "x"), EmptyIndexError);
}

TEST(LearningIndexTest, Values) {
  EXPECT_EQ(learning_index(100, 100, 5).li, 1.0);
  EXPECT_EQ(learning_index(50, 100, 1).li, 0.5);
  // 0.5^0.1 evaluated at 30 digits: 0.933032991536807415981...
  EXPECT_NEAR(learning_index(50, 100, 10).li, 0.9330329915368074, 1e-15);
}

TEST(LearningIndexTest, DomainErrors) {
  EXPECT_THROW(learning_index(101, 100, 1), DomainError);
  EXPECT_THROW(learning_index(0, 100, 1), DomainError);
  EXPECT_THROW(learning_index(-1, 100, 1), DomainError);
  EXPECT_THROW(learning_index(50, 100, 0), DomainError);
  EXPECT_THROW(learning_index(NAN, 100, 1), DomainError);
}

TEST(LearningIndexPropertyTest, ResidualLaw) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> scale(1e-3, 1e6), ratio(1e-6, 1.0);
  std::uniform_int_distribution<int> batches(1, 50);
  for (int iter = 0; iter < 1000; ++iter) {
    double n = scale(rng), t = n * ratio(rng);
    int f = batches(rng);
    DecayConfig cfg = learning_index(t, n, f);
    EXPECT_GT(cfg.li, 0.0);
    EXPECT_LE(cfg.li, 1.0);
    EXPECT_LE(std::abs(n * std::pow(cfg.li, f) - t), 1e-6 * n);
  }
}

TEST(DecayUpdateTest, WorkedExample) {
  FrequencyIndex index = build_frequency_index(tweets_from({"a a b b"}));
  FrequencyIndex updated = decay_update(index, tweets_from({"a c"}), 0.5);
  EXPECT_EQ(updated.mass("a"), 2.0);
  EXPECT_EQ(updated.mass("b"), 1.0);
  EXPECT_EQ(updated.mass("c"), 1.0);
  EXPECT_EQ(updated.total_mass(), 4.0);
  EXPECT_EQ(relative_frequency(updated, "a"), 0.5);
  EXPECT_EQ(relative_frequency(updated, "b"), 0.25);
  EXPECT_EQ(relative_frequency(updated, "c"), 0.25);
}

TEST(DecayUpdateTest, NoDecayEqualsConcatenation) {
  auto old_tweets = tweets_from(kCorpusA);
  auto batch = tweets_from({"great news", "more goals today"});
  auto all = old_tweets;
  all.insert(all.end(), batch.begin(), batch.end());
  EXPECT_EQ(decay_update(build_frequency_index(old_tweets), batch, 1.0), build_frequency_index(all));
}

TEST(DecayUpdateTest, EmptyBatchKeepsRatios) {
  FrequencyIndex index = build_frequency_index(tweets_from(kCorpusA));
  FrequencyIndex updated = decay_update(index, {}, 0.5);
  for (const auto& [word, mass] : index.masses()) {
    EXPECT_NEAR(relative_frequency(updated, word), relative_frequency(index, word), 1e-15);
  }
}

TEST(DecayUpdateTest, PrunesVanishingMasses) {
  FrequencyIndex index = build_frequency_index(tweets_from({"old"}));
  for (int i = 0; i < 40; ++i) index = decay_update(index, tweets_from({"new"}), 0.5);
  EXPECT_EQ(index.mass("old"), 0.0);
  EXPECT_EQ(index.distinct_words(), 1u);
  EXPECT_NEAR(index.total_mass(), index.mass("new"), 1e-9);
}

TEST(DecayUpdateTest, RejectsBadLearningIndex) {
  FrequencyIndex index = build_frequency_index(tweets_from({"a"}));
  EXPECT_THROW(decay_update(index, {}, 0.0), DomainError);
  EXPECT_THROW(decay_update(index, {}, 1.5), DomainError);
}

TEST(DecayUpdatePropertyTest, Linearity) {
  trendrank::testing::CorpusGenerator gen(41);
  std::uniform_real_distribution<double> li_dist(0.05, 1.0);
  for (int iter = 0; iter < 50; ++iter) {
    auto old_texts = gen.corpus(1, 30, 1, 12);
    auto new_texts = gen.corpus(0, 10, 1, 12);
    double li = li_dist(gen.rng());
    FrequencyIndex index = build_frequency_index(tweets_from(old_texts));
    FrequencyIndex updated = decay_update(index, tweets_from(new_texts), li);
    auto occurrences = trendrank::testing::oracle_count(new_texts);
    for (const auto& [word, mass] : index.masses()) {
      auto it = occurrences.counts.find(word);
      double added = it == occurrences.counts.end() ? 0.0 : static_cast<double>(it->second);
      EXPECT_NEAR(updated.mass(word), li * mass + added, 1e-12);
    }
  }
}

TEST(TopKTest, Values) {
  FrequencyIndex index = build_frequency_index(tweets_from(kCorpusA));
  EXPECT_DOUBLE_EQ(top_k_contribution(index, 1), 3.0 / 9.0);
  EXPECT_DOUBLE_EQ(top_k_contribution(index, 2), 5.0 / 9.0);
  EXPECT_EQ(top_k_contribution(index, 6), 1.0);
  EXPECT_EQ(top_k_contribution(index, 100), 1.0);
  EXPECT_THROW(top_k_contribution(index, 0), DomainError);
  EXPECT_THROW(top_k_contribution(FrequencyIndex{}, 1), EmptyIndexError);
}

TEST(TopKPropertyTest, MonotoneAndMatchesOracle) {
  trendrank::testing::CorpusGenerator gen(43);
  for (int iter = 0; iter < 50; ++iter) {
    FrequencyIndex index = build_frequency_index(tweets_from(gen.corpus(1, 40, 1, 15)));
    double previous = 0.0;
    for (std::size_t k = 1; k <= index.distinct_words(); ++k) {
      double value = top_k_contribution(index, k);
      EXPECT_GE(value, previous);
      EXPECT_NEAR(value, trendrank::testing::oracle_top_k(masses_of(index), k), 1e-12);
      previous = value;
    }
    EXPECT_EQ(top_k_contribution(index, index.distinct_words()), 1.0);
  }
}

TEST(HistogramTest, CorpusA) {
  auto rows = frequency_histogram(build_frequency_index(tweets_from(kCorpusA)));
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].rank, 1u);
  EXPECT_EQ(rows[0].word, "great");
  EXPECT_EQ(rows[0].mass, 3.0);
  EXPECT_DOUBLE_EQ(rows[0].cumulative_fraction, 3.0 / 9.0);
  EXPECT_EQ(rows[1].word, "match");
  // Ties at mass 1 in lexicographic order.
  EXPECT_EQ(rows[2].word, "goals");
  EXPECT_EQ(rows[3].word, "the");
  EXPECT_EQ(rows[4].word, "today");
  EXPECT_EQ(rows[5].word, "was");
  EXPECT_NEAR(rows[5].cumulative_fraction, 1.0, 1e-9);
  EXPECT_TRUE(frequency_histogram(FrequencyIndex{}).empty());
}

TEST(FrequencyIndexPropertyTest, MatchesNaiveCounting) {
  trendrank::testing::CorpusGenerator gen(47);
  for (int iter = 0; iter < 100; ++iter) {
    auto texts = gen.corpus(0, 50, 1, 15);
    FrequencyIndex index = build_frequency_index(tweets_from(texts));
    auto oracle = trendrank::testing::oracle_count(texts);
    ASSERT_EQ(index.distinct_words(), oracle.counts.size());
    EXPECT_EQ(index.total_mass(), static_cast<double>(oracle.total));
    for (const auto& [word, count] : oracle.counts) EXPECT_EQ(index.mass(word), static_cast<double>(count));
  }
}

TEST(FrequencyIndexPropertyTest, RelativeFrequenciesSumToOne) {
  trendrank::testing::CorpusGenerator gen(53);
  for (int iter = 0; iter < 100; ++iter) {
    FrequencyIndex index = build_frequency_index(tweets_from(gen.corpus(1, 60, 1, 20)));
    if (iter % 2 == 1) index = decay_update(index, tweets_from(gen.corpus(1, 10, 1, 10)), 0.7);
    double sum = 0.0, mass_sum = 0.0;
    for (const auto& [word, mass] : index.masses()) {
      sum += relative_frequency(index, word);
      mass_sum += mass;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
    EXPECT_NEAR(mass_sum, index.total_mass(), 1e-9 * index.total_mass());
  }
}

TEST(FrequencyIndexPropertyTest, DuplicationLeavesRatiosUnchanged) {
  trendrank::testing::CorpusGenerator gen(59);
  for (int iter = 0; iter < 30; ++iter) {
    auto texts = gen.corpus(1, 20, 1, 10);
    std::vector<std::string> repeated;
    const int copies = 2 + iter % 4;
    for (int m = 0; m < copies; ++m) repeated.insert(repeated.end(), texts.begin(), texts.end());
    FrequencyIndex once = build_frequency_index(tweets_from(texts));
    FrequencyIndex many = build_frequency_index(tweets_from(repeated));
    EXPECT_EQ(many.total_mass(), copies * once.total_mass());
    for (const auto& [word, mass] : once.masses()) {
      EXPECT_EQ(many.mass(word), copies * mass);
      EXPECT_DOUBLE_EQ(relative_frequency(many, word), relative_frequency(once, word));
    }
  }
}
