#include "lrclab/lrcstats/verdict.hpp"

#include "lrclab/seqcore/csv.hpp"
#include "lrclab/seqcore/error.hpp"

namespace lrc::stats {

LrcVerdict judge_lrc(const AcfCurve& curve) {
  LrcVerdict verdict;
  std::size_t small = 0;
  for (const auto& p : curve.points) {
    if (p.s >= kVerdictOffsetLimit) continue;
    ++small;
    if (!(p.c > 0.0)) verdict.offending.push_back(p);
  }
  if (small == 0) throw DataError("curve lacks small offsets");

  verdict.holds = verdict.offending.empty();
  if (verdict.holds) {
    verdict.reason = "all " + std::to_string(small) + " points with s < 10 are positive";
  } else {
    verdict.reason = "non-positive C(s) at";
    for (const auto& p : verdict.offending) {
      verdict.reason += " s=" + std::to_string(p.s) + " (" + format_real(p.c) + ")";
    }
  }
  return verdict;
}

}  // namespace lrc::stats
