#include "trendrank/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "trendrank/corpus.hpp"
#include "trendrank/errors.hpp"
#include "trendrank/lexicon.hpp"
#include "trendrank/scorer.hpp"
#include "trendrank/tokenizer.hpp"

#ifndef TRENDRANK_DATA_DIR
#define TRENDRANK_DATA_DIR "data"
#endif

namespace trendrank {

namespace {

// Input problem already carrying the offending path.
class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    throw InputFailure(e.what());
  } catch (const Error& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

std::vector<Tweet> load_corpus(const std::string& path, const RunConfig& config) {
  return with_path(path, [&] {
    std::string raw = read_file(path);
    return config.corpus_format == CorpusFormat::JsonLines ? parse_corpus_jsonl(raw)
                                                           : parse_corpus(raw, config.separator);
  });
}

Lexicon load_lexicon_file(const std::string& path, LexiconKind kind) {
  return with_path(path, [&] { return load_lexicon(read_file(path), kind); });
}

std::vector<Tweet> associate(const std::vector<Tweet>& tweets, const std::vector<TrendTag>& trends) {
  if (trends.empty()) return tweets;
  return prepare_sample_space(tweets, trends.front(), trends).tweets;
}

void warn_overlong(const std::vector<Tweet>& tweets, const std::string& path, std::ostream& err) {
  std::size_t count = 0;
  std::size_t first = 0;
  for (const Tweet& tweet : tweets) {
    if (char_length(tweet.text) > kMaxTweetChars) {
      if (count++ == 0) first = tweet.position;
    }
  }
  if (count > 0) {
    err << "warning: " << path << ": " << count << " record(s) exceed " << kMaxTweetChars
        << " characters (first at position " << first << ")\n";
  }
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("TRENDRANK_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return TRENDRANK_DATA_DIR;
}

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.top_k < 1) throw InputFailure("--top must be at least 1");
    std::optional<DecayConfig> decay;
    if (config.decay) {
      if (config.decay->update_path.empty()) throw InputFailure("decay requires an update corpus");
      try {
        decay = learning_index(config.decay->t, config.decay->n, config.decay->f);
      } catch (const DomainError& e) {
        throw InputFailure(std::string("invalid decay parameters: ") + e.what());
      }
    }

    const std::string filter_path =
        config.filter_path.empty() ? default_data_dir() + "/filter.txt" : config.filter_path;
    const std::string cnfilter_path =
        config.cnfilter_path.empty() ? default_data_dir() + "/cnfilter.txt" : config.cnfilter_path;
    const Lexicon filter_lex = load_lexicon_file(filter_path, LexiconKind::Filter);
    const Lexicon cn_lex = load_lexicon_file(cnfilter_path, LexiconKind::CnFilter);

    std::vector<TrendTag> trends;
    if (config.trends_path) {
      trends = with_path(*config.trends_path, [&] { return load_trends(read_file(*config.trends_path)); });
    }

    const std::vector<Tweet> retrieved = load_corpus(config.corpus_path, config);
    warn_overlong(retrieved, config.corpus_path, err);
    std::vector<Tweet> sample = associate(retrieved, trends);
    if (sample.empty()) {
      err << "error: empty sample space\n";
      return kExitEmptySampleSpace;
    }

    FrequencyIndex index = build_frequency_index(sample);
    std::vector<Tweet> candidates = std::move(sample);
    if (decay) {
      const std::vector<Tweet> update = load_corpus(config.decay->update_path, config);
      warn_overlong(update, config.decay->update_path, err);
      std::vector<Tweet> batch = associate(update, trends);
      index = decay_update(index, batch, decay->li);
      for (Tweet& tweet : batch) {
        tweet.position = candidates.size();
        candidates.push_back(std::move(tweet));
      }
    }
    if (!(index.total_mass() > 0.0)) {
      err << "error: empty sample space (no countable words)\n";
      return kExitEmptySampleSpace;
    }

    const RankedList ranked = rank_tweets(candidates, index, filter_lex, cn_lex, config.use_normalized);
    const std::string trend_name = trends.empty() ? std::string() : "#" + trends.front().name;
    const Report report = make_report(trend_name, index, ranked, config.top_k);
    out << emit_report(report, config.output_format);
    out.flush();

    if (config.histogram_csv_path) {
      try {
        emit_histogram_csv(index, *config.histogram_csv_path);
      } catch (const IoError& e) {
        throw InputFailure(e.what());
      }
    }
    return kExitOk;
  } catch (const InputFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank microblog posts by how well they describe a trend"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string corpus_format = "plain";
  std::string trends_path;
  std::string histogram_path;
  DecayOptions decay;

  CLI::App* analyze = app.add_subcommand("analyze", "Index a corpus and print the ranked report");
  analyze->add_option("--corpus", config.corpus_path, "Corpus file")->required();
  analyze->add_option("--separator", config.separator, "Record separator line")->capture_default_str();
  analyze->add_option("--corpus-format", corpus_format, "plain (separator lines) or jsonl")
      ->check(CLI::IsMember({"plain", "jsonl"}))
      ->capture_default_str();
  analyze->add_option("--trends", trends_path, "Trends file; the first tag is the highest trending");
  analyze->add_option("--filter", config.filter_path, "Stop-word lexicon (default: bundled list)");
  analyze->add_option("--cnfilter", config.cnfilter_path, "Common-word lexicon (default: bundled list)");
  analyze->add_option("--top", config.top_k, "Rows shown for words and tweets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_flag("--normalize-length", config.use_normalized, "Rank by the length-normalized score");
  auto* opt_t = analyze->add_option("--decay-t", decay.t, "Residual contribution of old data");
  auto* opt_n = analyze->add_option("--decay-n", decay.n, "Current contribution of old data");
  auto* opt_f = analyze->add_option("--decay-f", decay.f, "Batches until the residual is reached");
  auto* opt_update = analyze->add_option("--update", decay.update_path, "Corpus of newer tweets");
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  analyze->add_option("--histogram-csv", histogram_path, "Write the word frequency histogram here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return kExitInputError;
  }

  const std::size_t decay_flags = opt_t->count() + opt_n->count() + opt_f->count() + opt_update->count();
  if (decay_flags != 0 && (opt_t->count() == 0 || opt_n->count() == 0 || opt_f->count() == 0 ||
                           opt_update->count() == 0)) {
    err << "error: --decay-t, --decay-n, --decay-f and --update must be given together\n";
    return kExitInputError;
  }
  if (decay_flags != 0) config.decay = decay;
  if (!trends_path.empty()) config.trends_path = trends_path;
  if (!histogram_path.empty()) config.histogram_csv_path = histogram_path;
  config.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  config.corpus_format = corpus_format == "jsonl" ? CorpusFormat::JsonLines : CorpusFormat::Separated;
  if (config.separator.empty()) {
    err << "error: --separator must not be empty\n";
    return kExitInputError;
  }
  return run_analyze(config, out, err);
}

}  // namespace trendrank
