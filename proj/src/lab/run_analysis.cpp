#include "lrclab/lab/run_analysis.hpp"

#include <fstream>
#include <sstream>

#include "lrclab/corpusio/tokens.hpp"
#include "lrclab/lrcstats/autocorrelation.hpp"
#include "lrclab/lrcstats/scaling.hpp"
#include "lrclab/seqcore/csv.hpp"
#include "lrclab/seqcore/error.hpp"

namespace lrc::lab {

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
}

namespace {

template <typename T>
std::string csv_text(const T& value) {
  std::ostringstream ss;
  write_csv(ss, value);
  return ss.str();
}

}  // namespace

stats::AnalysisReport write_analysis(const TokenSequence& seq, const AnalyzeOptions& opts,
                                     const std::filesystem::path& out_dir) {
  std::vector<SymbolId> rare;
  for (const auto& word : opts.rare_words) {
    SymbolId id = 0;
    if (!seq.find_symbol(corpus::to_lower(word), id)) {
      throw DataError("rare word '" + word + "' does not occur");
    }
    rare.push_back(id);
  }
  if (rare.empty()) rare = stats::select_rare_set(seq, opts.rarity);

  auto ints = stats::extract_intervals(seq, rare, opts.rare_words.empty() ? opts.rarity : 0);
  auto rf = stats::rank_frequency(seq);
  auto tt = stats::type_token_curve(seq);
  write_text(out_dir / "intervals.csv", csv_text(ints));
  write_text(out_dir / "rankfreq.csv", csv_text(rf));
  write_text(out_dir / "typetoken.csv", csv_text(tt));

  auto curve = stats::acf_curve(ints);
  auto gamma = stats::fit_acf(curve);
  auto verdict = stats::judge_lrc(curve);
  auto zipf = stats::fit_zipf(rf);
  auto heaps = stats::fit_heaps(tt);
  stats::AnalysisReport report{opts.rarity, seq.size(), std::move(rare), std::move(ints),
                               std::move(curve), gamma, std::move(rf), zipf, std::move(tt),
                               heaps, std::move(verdict)};
  write_text(out_dir / "acf.csv", csv_text(report.acf));
  write_text(out_dir / "report.json", stats::report_json(report).dump(2) + "\n");
  return report;
}

stats::AnalysisReport run_analysis(const std::filesystem::path& input, const AnalyzeOptions& opts,
                                   const std::filesystem::path& out_dir) {
  const auto seq = corpus::read_token_file(input.string());
  try {
    return write_analysis(seq, opts, out_dir);
  } catch (const DataError& e) {
    throw DataError(input.string() + ": " + e.what());
  }
}

}  // namespace lrc::lab
