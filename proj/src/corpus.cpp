#include "trendrank/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "lines.hpp"
#include "trendrank/errors.hpp"
#include "trendrank/unicode.hpp"

namespace trendrank {

TrendTag make_tag(std::string_view raw) {
  std::size_t hashes = 0;
  while (hashes < raw.size() && raw[hashes] == '#') ++hashes;
  raw.remove_prefix(hashes);
  return TrendTag{unicode::fold_case(unicode::strip_punctuation(raw, false, true))};
}

std::set<TrendTag> extract_tags(std::string_view text) {
  std::set<TrendTag> tags;
  for (std::string_view token : unicode::split_whitespace(text)) {
    if (token.front() != '#') continue;
    TrendTag tag = make_tag(token);
    if (!tag.name.empty()) tags.insert(std::move(tag));
  }
  return tags;
}

namespace {

Tweet make_tweet(std::string_view segment, std::size_t position) {
  std::string_view text = unicode::trim(segment);
  return Tweet{std::string(text), extract_tags(text), position};
}

}  // namespace

std::vector<Tweet> parse_corpus(std::string_view raw_text, std::string_view separator) {
  if (separator.empty()) throw DomainError("record separator must not be empty");
  unicode::validate_utf8(raw_text);

  std::vector<Tweet> tweets;
  std::size_t segment_begin = 0;
  auto flush = [&](std::size_t segment_end) {
    std::string_view segment = raw_text.substr(segment_begin, segment_end - segment_begin);
    if (!unicode::trim(segment).empty()) tweets.push_back(make_tweet(segment, tweets.size()));
  };

  std::size_t line_begin = 0;
  while (line_begin < raw_text.size()) {
    std::size_t line_end = raw_text.find('\n', line_begin);
    if (line_end == std::string_view::npos) line_end = raw_text.size();
    if (unicode::trim(raw_text.substr(line_begin, line_end - line_begin)) == separator) {
      flush(line_begin);
      segment_begin = line_end + 1;
    }
    line_begin = line_end + 1;
  }
  if (segment_begin < raw_text.size()) flush(raw_text.size());
  return tweets;
}

std::vector<Tweet> parse_corpus_jsonl(std::string_view raw_text) {
  unicode::validate_utf8(raw_text);

  std::vector<Tweet> tweets;
  std::size_t line_number = 0;
  std::size_t begin = 0;
  while (begin < raw_text.size()) {
    std::size_t end = raw_text.find('\n', begin);
    if (end == std::string_view::npos) end = raw_text.size();
    ++line_number;
    std::string_view line = unicode::trim(raw_text.substr(begin, end - begin));
    begin = end + 1;
    if (line.empty()) continue;

    auto fail = [line_number](const std::string& why) {
      throw FormatError("jsonl line " + std::to_string(line_number) + ": " + why);
    };
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(e.what());
    }
    if (!record.is_object()) fail("expected an object");
    auto text_it = record.find("text");
    if (text_it == record.end() || !text_it->is_string()) fail("missing string field \"text\"");

    Tweet tweet = make_tweet(text_it->get_ref<const std::string&>(), tweets.size());
    if (tweet.text.empty()) fail("empty text");

    if (auto tags_it = record.find("tags"); tags_it != record.end()) {
      if (!tags_it->is_array()) fail("\"tags\" must be a list of strings");
      for (const auto& raw_tag : *tags_it) {
        if (!raw_tag.is_string()) fail("\"tags\" must be a list of strings");
        TrendTag tag = make_tag(raw_tag.get_ref<const std::string&>());
        if (tag.name.empty()) fail("empty tag");
        if (!tweet.has_tag(tag)) fail("tag #" + tag.name + " does not occur in the text");
      }
    }
    tweets.push_back(std::move(tweet));
  }
  return tweets;
}

SampleSpace prepare_sample_space(const std::vector<Tweet>& retrieved, const TrendTag& highest,
                                 const std::vector<TrendTag>& trends) {
  for (std::size_t i = 0; i < trends.size(); ++i) {
    for (std::size_t j = i + 1; j < trends.size(); ++j) {
      if (trends[i] == trends[j]) throw DomainError("duplicate trend tag #" + trends[i].name);
    }
  }

  SampleSpace ss{{}, highest, trends};
  auto add = [&ss](const Tweet& tweet) {
    Tweet copy = tweet;
    copy.position = ss.tweets.size();
    ss.tweets.push_back(std::move(copy));
  };
  for (const Tweet& tweet : retrieved) {
    if (tweet.has_tag(highest)) add(tweet);
  }
  for (const TrendTag& tag : trends) {
    for (const Tweet& tweet : retrieved) {
      if (tweet.has_tag(tag)) add(tweet);
    }
  }
  return ss;
}

std::vector<TrendTag> load_trends(std::string_view raw_text) {
  unicode::validate_utf8(raw_text);
  std::vector<TrendTag> tags;
  detail::for_each_content_line(raw_text, [&tags](std::string_view line, std::size_t line_number) {
    if (unicode::contains_whitespace(line)) {
      throw FormatError("trends line " + std::to_string(line_number) + ": tag contains whitespace");
    }
    TrendTag tag = make_tag(line);
    if (tag.name.empty()) {
      throw FormatError("trends line " + std::to_string(line_number) + ": empty tag");
    }
    for (const TrendTag& seen : tags) {
      if (seen == tag) throw FormatError("duplicate trend tag #" + tag.name);
    }
    tags.push_back(std::move(tag));
  });
  if (tags.empty()) throw FormatError("trends file lists no tags");
  return tags;
}

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw IoError("cannot read " + path + ": is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buffer.str();
}

}  // namespace trendrank
