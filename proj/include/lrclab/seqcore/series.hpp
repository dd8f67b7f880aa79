#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lrc {

/// Gaps between successive occurrences of rare tokens.
class IntervalSequence {
 public:
  /// `rarity` is the divisor N used to pick the rare set (0 when the set was
  /// given explicitly). Throws std::invalid_argument on a zero interval and
  /// DataError when empty.
  IntervalSequence(std::vector<std::int64_t> intervals, std::size_t rarity);

  [[nodiscard]] std::span<const std::int64_t> intervals() const noexcept { return intervals_; }
  [[nodiscard]] std::size_t rarity() const noexcept { return rarity_; }
  [[nodiscard]] std::size_t count() const noexcept { return intervals_.size(); }
  [[nodiscard]] double mean() const noexcept { return mean_; }
  [[nodiscard]] double sd() const noexcept { return sd_; }
  [[nodiscard]] std::vector<double> as_reals() const;

 private:
  std::vector<std::int64_t> intervals_;
  std::size_t rarity_;
  double mean_;
  double sd_;
};

struct AcfPoint {
  std::size_t s = 0;
  double c = 0.0;
  friend bool operator==(const AcfPoint&, const AcfPoint&) = default;
};

/// Autocorrelation samples at increasing offsets; negative values are kept.
struct AcfCurve {
  std::vector<AcfPoint> points;
  std::size_t source_length = 0;  // M_N of the analyzed interval sequence
  friend bool operator==(const AcfCurve&, const AcfCurve&) = default;
};

/// Least-squares line in log10-log10 space.
struct PowerLawFit {
  double exponent = 0.0;  // positive for decays, the slope for growth
  double slope = 0.0;
  double amplitude = 0.0;  // fitted value at x = 1
  double fit_error_per_point = 0.0;
  double sum_squared_residuals = 0.0;
  std::size_t n_points_used = 0;
  std::size_t n_points_excluded = 0;
};

struct RankFrequencyEntry {
  std::size_t rank = 0;
  std::uint64_t freq = 0;
  friend bool operator==(const RankFrequencyEntry&, const RankFrequencyEntry&) = default;
};

struct RankFrequency {
  std::vector<RankFrequencyEntry> entries;
  friend bool operator==(const RankFrequency&, const RankFrequency&) = default;
};

struct TypeTokenSample {
  std::size_t m = 0;
  std::size_t v = 0;
  friend bool operator==(const TypeTokenSample&, const TypeTokenSample&) = default;
};

struct TypeTokenCurve {
  std::vector<TypeTokenSample> samples;
  friend bool operator==(const TypeTokenCurve&, const TypeTokenCurve&) = default;
};

}  // namespace lrc
