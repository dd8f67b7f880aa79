#include "lrclab/lrcstats/autocorrelation.hpp"

#include <stdexcept>
#include <vector>

#include "lrclab/lrcstats/log_grid.hpp"
#include "lrclab/seqcore/error.hpp"

namespace lrc::stats {

double autocorrelation(std::span<const double> series, std::size_t s) {
  return autocorrelation(series, s, moments(series));
}

double autocorrelation(std::span<const double> series, std::size_t s, const Moments& m) {
  const std::size_t n = series.size();
  if (s >= n) throw std::out_of_range("offset out of range");
  const double var = m.sd * m.sd;
  if (!(var > 0.0)) throw DataError("degenerate series");
  const std::size_t overlap = n - s;
  double acc = 0.0;
  for (std::size_t i = 0; i < overlap; ++i) {
    acc += (series[i] - m.mean) * (series[i + s] - m.mean);
  }
  return acc / (static_cast<double>(overlap) * var);
}

AcfCurve acf_curve(const IntervalSequence& ints) {
  const std::size_t m_n = ints.count();
  if (m_n < kMinCurveLength) throw DataError("interval sequence too short for curve");
  if (!(ints.sd() > 0.0)) throw DataError("degenerate series");

  const auto reals = ints.as_reals();
  const Moments m{ints.mean(), ints.sd()};
  AcfCurve curve;
  curve.source_length = m_n;
  for (std::size_t s : log_grid(m_n / kCurveSpanDivisor)) {
    curve.points.push_back({s, autocorrelation(reals, s, m)});
  }
  return curve;
}

}  // namespace lrc::stats
