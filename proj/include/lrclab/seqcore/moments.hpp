#pragma once

#include <span>

namespace lrc {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;  // population form, divides by the count
};

/// Mean and population standard deviation. Throws DataError("empty series")
/// on empty input.
[[nodiscard]] Moments moments(std::span<const double> xs);

}  // namespace lrc
