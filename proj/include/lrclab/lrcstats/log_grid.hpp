#pragma once

#include <cstddef>
#include <vector>

namespace lrc::stats {

inline constexpr int kPointsPerDecade = 20;

/// Integer offsets round(10^(k/20)) for k = 0, 1, 2, ..., deduplicated and
/// kept while <= max_value. Empty when max_value is 0.
[[nodiscard]] std::vector<std::size_t> log_grid(std::size_t max_value,
                                                int per_decade = kPointsPerDecade);

/// Same grid, with max_value appended when the rule does not land on it.
[[nodiscard]] std::vector<std::size_t> log_grid_through(std::size_t max_value,
                                                        int per_decade = kPointsPerDecade);

}  // namespace lrc::stats
