#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "lrclab/lrcstats/analysis.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::lab {

struct AnalyzeOptions {
  std::size_t rarity = stats::kDefaultRarity;
  /// Surface forms forming the rare set; empty means select by rarity.
  std::vector<std::string> rare_words;
};

/// Runs the analysis pipeline and writes into `out_dir`:
///   intervals.csv, rankfreq.csv, typetoken.csv   (always, first)
///   acf.csv, report.json                         (when the curve exists)
/// Data errors from the curve stage propagate after the first three files
/// are on disk.
stats::AnalysisReport write_analysis(const TokenSequence& seq, const AnalyzeOptions& opts,
                                     const std::filesystem::path& out_dir);

/// Reads a token file and calls write_analysis. DataError messages are
/// prefixed with the input path.
stats::AnalysisReport run_analysis(const std::filesystem::path& input, const AnalyzeOptions& opts,
                                   const std::filesystem::path& out_dir);

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace lrc::lab
