#pragma once

#include <span>

#include "lrclab/seqcore/series.hpp"

namespace lrc::stats {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class Trend {
  decay,   // exponent = -slope (gamma, xi)
  growth,  // exponent = slope (zeta)
};

/// Ordinary least squares of log10(y) on log10(x) over the points with
/// y > 0. Points with y <= 0 are counted in n_points_excluded. The fit
/// error is sqrt(sum of squared log10 residuals) / n_points_used.
///
/// Throws DataError("not enough positive points") with fewer than two usable
/// points, and std::invalid_argument for x <= 0.
[[nodiscard]] PowerLawFit fit_power_law(std::span<const Point> points, Trend trend);

}  // namespace lrc::stats
