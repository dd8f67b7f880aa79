#include "lrclab/seqcore/series.hpp"

#include <stdexcept>

#include "lrclab/seqcore/error.hpp"
#include "lrclab/seqcore/moments.hpp"

namespace lrc {

IntervalSequence::IntervalSequence(std::vector<std::int64_t> intervals, std::size_t rarity)
    : intervals_(std::move(intervals)), rarity_(rarity), mean_(0.0), sd_(0.0) {
  if (intervals_.empty()) throw DataError("insufficient occurrences");
  for (auto r : intervals_) {
    if (r < 1) throw std::invalid_argument("interval must be at least 1");
  }
  const auto reals = as_reals();
  const Moments m = moments(reals);
  mean_ = m.mean;
  sd_ = m.sd;
}

std::vector<double> IntervalSequence::as_reals() const {
  return {intervals_.begin(), intervals_.end()};
}

}  // namespace lrc
