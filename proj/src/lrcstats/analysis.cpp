#include "lrclab/lrcstats/analysis.hpp"

#include "lrclab/lrcstats/autocorrelation.hpp"
#include "lrclab/lrcstats/log_grid.hpp"
#include "lrclab/lrcstats/power_law.hpp"
#include "lrclab/lrcstats/scaling.hpp"

namespace lrc::stats {

PowerLawFit fit_zipf(const RankFrequency& rf) {
  std::vector<Point> pts;
  for (std::size_t rank : log_grid_through(rf.entries.size())) {
    const auto& e = rf.entries[rank - 1];
    pts.push_back({static_cast<double>(e.rank), static_cast<double>(e.freq)});
  }
  return fit_power_law(pts, Trend::decay);
}

PowerLawFit fit_heaps(const TypeTokenCurve& curve) {
  std::vector<Point> all;
  std::vector<Point> tail;
  for (const auto& s : curve.samples) {
    const Point p{static_cast<double>(s.m), static_cast<double>(s.v)};
    all.push_back(p);
    if (s.m >= kHeapsFitMinLength) tail.push_back(p);
  }
  return fit_power_law(tail.size() >= 2 ? tail : all, Trend::growth);
}

PowerLawFit fit_acf(const AcfCurve& curve) {
  std::vector<Point> pts;
  pts.reserve(curve.points.size());
  for (const auto& p : curve.points) pts.push_back({static_cast<double>(p.s), p.c});
  return fit_power_law(pts, Trend::decay);
}

AnalysisReport analyze(const TokenSequence& seq, std::size_t rarity,
                       const std::vector<SymbolId>& forced_rare) {
  auto rare = forced_rare.empty() ? select_rare_set(seq, rarity) : forced_rare;
  auto ints = extract_intervals(seq, rare, forced_rare.empty() ? rarity : 0);
  auto curve = acf_curve(ints);
  auto gamma = fit_acf(curve);
  auto verdict = judge_lrc(curve);
  auto rf = rank_frequency(seq);
  auto zipf = fit_zipf(rf);
  auto tt = type_token_curve(seq);
  auto heaps = fit_heaps(tt);
  return AnalysisReport{rarity,
                        seq.size(),
                        std::move(rare),
                        std::move(ints),
                        std::move(curve),
                        gamma,
                        std::move(rf),
                        zipf,
                        std::move(tt),
                        heaps,
                        std::move(verdict)};
}

nlohmann::json report_json(const AnalysisReport& r) {
  nlohmann::json negatives = nlohmann::json::array();
  for (const auto& p : r.verdict.offending) negatives.push_back({{"s", p.s}, {"c", p.c}});
  return {
      {"n", r.rarity},
      {"m", r.length},
      {"m_n", r.intervals.count()},
      {"gamma", r.gamma.exponent},
      {"gamma_fit_error", r.gamma.fit_error_per_point},
      {"gamma_amplitude", r.gamma.amplitude},
      {"zipf_exponent", r.zipf.exponent},
      {"zipf_amplitude", r.zipf.amplitude},
      {"heaps_exponent", r.heaps.exponent},
      {"heaps_amplitude", r.heaps.amplitude},
      {"lrc_verdict", r.verdict.holds},
      {"negative_small_s_points", std::move(negatives)},
  };
}

}  // namespace lrc::stats
