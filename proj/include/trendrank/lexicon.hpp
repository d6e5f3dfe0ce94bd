#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>

#include "trendrank/tokenizer.hpp"

namespace trendrank {

enum class LexiconKind {
  Filter,    // articles, prepositions, conjunctions: skipped when scoring
  CnFilter,  // common content words: counted towards the all-common flag
};

class Lexicon {
 public:
  explicit Lexicon(LexiconKind kind = LexiconKind::Filter) : kind_(kind) {}

  LexiconKind kind() const { return kind_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& word) const { return words_.contains(word); }
  const std::unordered_set<std::string>& words() const { return words_; }

  // Case-folds; throws FormatError if the entry is empty or has whitespace.
  void insert(std::string_view word);

 private:
  LexiconKind kind_;
  std::unordered_set<std::string> words_;
};

// One word per line; blank lines and "# " comments are skipped, duplicates
// collapse. A line with internal whitespace is a FormatError naming the
// line number.
Lexicon load_lexicon(std::string_view raw_text, LexiconKind kind);

}  // namespace trendrank
