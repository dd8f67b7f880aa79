#include "lrclab/seqcore/moments.hpp"

#include <cmath>

#include "lrclab/seqcore/error.hpp"

namespace lrc {

Moments moments(std::span<const double> xs) {
  if (xs.empty()) throw DataError("empty series");
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / n;
  // Two-pass form; the correction term absorbs rounding in the mean.
  double ss = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    const double d = x - mean;
    ss += d * d;
    comp += d;
  }
  const double var = (ss - comp * comp / n) / n;
  return {mean, var > 0.0 ? std::sqrt(var) : 0.0};
}

}  // namespace lrc
