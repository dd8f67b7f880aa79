#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lrclab/seqcore/series.hpp"

namespace lrc::stats {

/// Offsets strictly below this value decide the verdict.
inline constexpr std::size_t kVerdictOffsetLimit = 10;

struct LrcVerdict {
  bool holds = false;
  std::string reason;
  std::vector<AcfPoint> offending;  // points with s < 10 and c <= 0
};

/// Long-range correlation holds iff every point with s < 10 is positive.
/// Throws DataError("curve lacks small offsets") if there is no such point.
[[nodiscard]] LrcVerdict judge_lrc(const AcfCurve& curve);

}  // namespace lrc::stats
