#pragma once

#include <cstddef>
#include <span>

#include "lrclab/seqcore/moments.hpp"
#include "lrclab/seqcore/series.hpp"

namespace lrc::stats {

/// Shortest interval sequence acf_curve accepts (gives offsets 1 and 2).
inline constexpr std::size_t kMinCurveLength = 200;
/// Offsets run up to M_N / kCurveSpanDivisor.
inline constexpr std::size_t kCurveSpanDivisor = 100;

/// C(s) = 1/((M-s) sigma^2) * sum_{i<M-s} (r_i - mu)(r_{i+s} - mu), with mu
/// and sigma taken over the whole series.
///
/// Throws DataError("degenerate series") for zero variance and
/// std::out_of_range("offset out of range") when s >= M.
[[nodiscard]] double autocorrelation(std::span<const double> series, std::size_t s);

/// As above with precomputed full-series moments.
[[nodiscard]] double autocorrelation(std::span<const double> series, std::size_t s,
                                     const Moments& m);

/// Evaluates C(s) on log_grid(M_N / 100). Every evaluated point is returned,
/// including negative ones.
[[nodiscard]] AcfCurve acf_curve(const IntervalSequence& ints);

}  // namespace lrc::stats
