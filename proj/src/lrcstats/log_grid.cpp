#include "lrclab/lrcstats/log_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace lrc::stats {

std::vector<std::size_t> log_grid(std::size_t max_value, int per_decade) {
  if (per_decade < 1) throw std::invalid_argument("per_decade must be positive");
  std::vector<std::size_t> grid;
  for (int k = 0;; ++k) {
    const double x = std::pow(10.0, static_cast<double>(k) / per_decade);
    const auto s = static_cast<std::size_t>(std::floor(x + 0.5));
    if (s > max_value) break;
    if (grid.empty() || grid.back() != s) grid.push_back(s);
  }
  return grid;
}

std::vector<std::size_t> log_grid_through(std::size_t max_value, int per_decade) {
  auto grid = log_grid(max_value, per_decade);
  if (max_value > 0 && (grid.empty() || grid.back() != max_value)) grid.push_back(max_value);
  return grid;
}

}  // namespace lrc::stats
