#include "trendrank/lexicon.hpp"

#include "lines.hpp"
#include "trendrank/errors.hpp"
#include "trendrank/unicode.hpp"

namespace trendrank {

void Lexicon::insert(std::string_view word) {
  word = unicode::trim(word);
  if (word.empty()) throw FormatError("empty lexicon entry");
  if (unicode::contains_whitespace(word)) {
    throw FormatError("lexicon entry \"" + std::string(word) + "\" contains whitespace");
  }
  words_.insert(unicode::fold_case(word));
}

Lexicon load_lexicon(std::string_view raw_text, LexiconKind kind) {
  unicode::validate_utf8(raw_text);
  Lexicon lexicon(kind);
  detail::for_each_content_line(raw_text, [&lexicon](std::string_view line, std::size_t line_number) {
    if (unicode::contains_whitespace(line)) {
      throw FormatError("lexicon line " + std::to_string(line_number) + ": \"" + std::string(line) +
                        "\" contains whitespace");
    }
    lexicon.insert(line);
  });
  return lexicon;
}

}  // namespace trendrank
