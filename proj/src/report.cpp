#include "trendrank/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

#include "trendrank/errors.hpp"
#include "trendrank/unicode.hpp"

namespace trendrank {

Report make_report(std::string trend_name, const FrequencyIndex& index, const RankedList& ranked,
                   std::size_t top_k) {
  Report report;
  report.trend_name = std::move(trend_name);
  report.tweet_count = ranked.entries.size();
  report.distinct_words = index.distinct_words();
  report.total_mass = index.total_mass();

  auto words = index.sorted_by_mass();
  const std::size_t word_rows = std::min(top_k, words.size());
  for (std::size_t i = 0; i < word_rows; ++i) {
    report.top_words.push_back({words[i].first, words[i].second, words[i].second / index.total_mass()});
  }

  const std::size_t tweet_rows = std::min(top_k, ranked.entries.size());
  for (std::size_t i = 0; i < tweet_rows; ++i) {
    const RankedEntry& entry = ranked.entries[i];
    report.ranked_tweets.push_back({entry.rank, entry.score.raw_score, entry.score.normalized_score,
                                    entry.score.all_common, entry.tweet.text});
  }
  return report;
}

std::string format_real(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::fixed, 9);
  if (ec != std::errc()) return std::to_string(value);
  std::string text(buffer, end);
  if (auto dot = text.find('.'); dot != std::string::npos) {
    text.erase(text.find_last_not_of('0') + 1);
    if (text.back() == '.') text.pop_back();
  }
  if (text == "-0") text = "0";
  return text;
}

std::string format_real_exact(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buffer, end);
}

namespace {

std::string json_string(const std::string& text) { return nlohmann::json(text).dump(); }

std::string single_line(std::string_view text) {
  std::string out;
  for (std::string_view piece : unicode::split_whitespace(text)) {
    if (!out.empty()) out.push_back(' ');
    out.append(piece);
  }
  return out;
}

std::string pad_right(const std::string& text, std::size_t width) {
  std::size_t length = unicode::codepoint_count(text);
  return length >= width ? text : text + std::string(width - length, ' ');
}

std::string emit_text(const Report& report) {
  std::ostringstream out;
  out << "Highest Trending : " << (report.trend_name.empty() ? "(none)" : report.trend_name) << '\n';
  out << "Tweets: " << report.tweet_count << "  Distinct words: " << report.distinct_words
      << "  Total mass: " << format_real(report.total_mass) << "\n\n";

  if (report.top_words.empty()) {
    out << "no words indexed\n";
  } else {
    std::size_t width = 4;
    for (const TopWord& w : report.top_words) width = std::max(width, unicode::codepoint_count(w.word));
    width += 2;
    out << pad_right("Word", width) << "Frequency\n";
    for (const TopWord& w : report.top_words) out << pad_right(w.word, width) << format_real(w.mass) << '\n';
  }

  if (report.ranked_tweets.empty()) {
    out << "\nno tweets ranked\n";
    return out.str();
  }
  out << "\nMost Eligible Tweet :\n" << report.ranked_tweets.front().text << "\n\n";

  std::vector<std::array<std::string, 4>> cells;
  std::array<std::size_t, 4> widths{4, 5, 10, 10};
  for (const RankedTweetRow& row : report.ranked_tweets) {
    cells.push_back({std::to_string(row.rank), format_real(row.raw_score), format_real(row.normalized_score),
                     row.all_common ? "yes" : "no"});
    for (std::size_t c = 0; c < 4; ++c) widths[c] = std::max(widths[c], cells.back()[c].size());
  }
  out << pad_right("Rank", widths[0] + 2) << pad_right("Score", widths[1] + 2)
      << pad_right("Normalized", widths[2] + 2) << pad_right("All common", widths[3] + 2) << "Tweet\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t c = 0; c < 4; ++c) out << pad_right(cells[i][c], widths[c] + 2);
    out << single_line(report.ranked_tweets[i].text) << '\n';
  }
  return out.str();
}

std::string emit_json(const Report& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"trend_name\": " << json_string(report.trend_name) << ",\n";
  out << "  \"tweet_count\": " << report.tweet_count << ",\n";
  out << "  \"distinct_words\": " << report.distinct_words << ",\n";
  out << "  \"total_mass\": " << format_real_exact(report.total_mass) << ",\n";
  out << "  \"top_words\": [";
  for (std::size_t i = 0; i < report.top_words.size(); ++i) {
    const TopWord& w = report.top_words[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"word\": " << json_string(w.word)
        << ", \"mass\": " << format_real_exact(w.mass)
        << ", \"relative_frequency\": " << format_real_exact(w.relative_frequency) << "}";
  }
  out << (report.top_words.empty() ? "],\n" : "\n  ],\n");
  out << "  \"ranked_tweets\": [";
  for (std::size_t i = 0; i < report.ranked_tweets.size(); ++i) {
    const RankedTweetRow& row = report.ranked_tweets[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"rank\": " << row.rank
        << ", \"raw_score\": " << format_real_exact(row.raw_score)
        << ", \"normalized_score\": " << format_real_exact(row.normalized_score)
        << ", \"all_common\": " << (row.all_common ? "true" : "false") << ", \"text\": " << json_string(row.text)
        << "}";
  }
  out << (report.ranked_tweets.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

}  // namespace

std::string emit_report(const Report& report, OutputFormat format) {
  return format == OutputFormat::Json ? emit_json(report) : emit_text(report);
}

std::string histogram_csv(const FrequencyIndex& index) {
  std::string csv = "rank,word,mass,cumulative_fraction\n";
  for (const HistogramEntry& row : frequency_histogram(index)) {
    csv += std::to_string(row.rank) + ',' + csv_field(row.word) + ',' + format_real(row.mass) + ',' +
           format_real(row.cumulative_fraction) + '\n';
  }
  return csv;
}

void emit_histogram_csv(const FrequencyIndex& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << histogram_csv(index);
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace trendrank
