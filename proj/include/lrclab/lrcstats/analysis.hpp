#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lrclab/lrcstats/intervals.hpp"
#include "lrclab/lrcstats/verdict.hpp"
#include "lrclab/seqcore/series.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::stats {

/// Heaps fits skip prefixes shorter than this, where V(m) ~ m trivially.
inline constexpr std::size_t kHeapsFitMinLength = 100;

/// Zipf exponent fitted on the rank-frequency points at log-grid ranks.
[[nodiscard]] PowerLawFit fit_zipf(const RankFrequency& rf);

/// Heaps exponent fitted on the samples with m >= kHeapsFitMinLength, or on
/// every sample when fewer than two qualify.
[[nodiscard]] PowerLawFit fit_heaps(const TypeTokenCurve& curve);

/// Decay exponent gamma of the positive part of an ACF curve.
[[nodiscard]] PowerLawFit fit_acf(const AcfCurve& curve);

struct AnalysisReport {
  std::size_t rarity = kDefaultRarity;
  std::size_t length = 0;  // M
  std::vector<SymbolId> rare_set;
  IntervalSequence intervals;
  AcfCurve acf;
  PowerLawFit gamma;
  RankFrequency rank_freq;
  PowerLawFit zipf;
  TypeTokenCurve type_token;
  PowerLawFit heaps;
  LrcVerdict verdict;
};

/// Full pipeline: rare set, intervals, ACF curve, gamma fit, verdict, and
/// the Zipf and Heaps fits. A non-empty `forced_rare` replaces the rare-set
/// selection.
[[nodiscard]] AnalysisReport analyze(const TokenSequence& seq, std::size_t rarity = kDefaultRarity,
                                     const std::vector<SymbolId>& forced_rare = {});

/// {n, m, m_n, gamma, gamma_fit_error, zipf_exponent, heaps_exponent,
///  lrc_verdict, negative_small_s_points} plus amplitudes.
[[nodiscard]] nlohmann::json report_json(const AnalysisReport& report);

}  // namespace lrc::stats
