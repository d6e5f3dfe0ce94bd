#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "trendrank/report.hpp"

namespace trendrank {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitEmptySampleSpace = 3;

enum class CorpusFormat {
  Separated,  // records split by a separator line
  JsonLines,  // one {"text": ..., "tags": [...]} object per line
};

struct DecayOptions {
  double t = 0.0;
  double n = 0.0;
  int f = 0;
  std::string update_path;
};

struct RunConfig {
  std::string corpus_path;
  std::string separator{kDefaultSeparator};
  CorpusFormat corpus_format = CorpusFormat::Separated;
  std::optional<std::string> trends_path;
  std::string filter_path;    // empty selects the bundled filter list
  std::string cnfilter_path;  // empty selects the bundled common-word list
  std::size_t top_k = 10;
  bool use_normalized = false;
  std::optional<DecayOptions> decay;
  OutputFormat output_format = OutputFormat::Text;
  std::optional<std::string> histogram_csv_path;
};

// Directory holding the bundled lexicons; TRENDRANK_DATA_DIR overrides the
// build-time default.
std::string default_data_dir();

// corpus -> lexicons -> index -> optional decay update -> ranking -> report.
// Returns kExitOk, kExitInputError or kExitEmptySampleSpace; diagnostics go
// to `err`.
int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

// Command-line front end: `trendrank analyze ...`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trendrank
