#include "lrclab/lrcstats/power_law.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lrclab/seqcore/error.hpp"

namespace lrc::stats {

PowerLawFit fit_power_law(std::span<const Point> points, Trend trend) {
  std::vector<double> lx;
  std::vector<double> ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  std::size_t excluded = 0;
  for (const auto& p : points) {
    if (!(p.x > 0.0)) throw std::invalid_argument("power-law abscissa must be positive");
    if (!(p.y > 0.0)) {
      ++excluded;
      continue;
    }
    lx.push_back(std::log10(p.x));
    ly.push_back(std::log10(p.y));
  }
  const std::size_t n = lx.size();
  if (n < 2) throw DataError("not enough positive points");

  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw DataError("not enough distinct abscissae");

  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (intercept + slope * lx[i]);
    sse += r * r;
  }

  PowerLawFit fit;
  fit.slope = slope;
  fit.exponent = trend == Trend::decay ? -slope : slope;
  fit.amplitude = std::pow(10.0, intercept);
  fit.sum_squared_residuals = sse;
  fit.fit_error_per_point = std::sqrt(sse) / static_cast<double>(n);
  fit.n_points_used = n;
  fit.n_points_excluded = excluded;
  return fit;
}

}  // namespace lrc::stats
