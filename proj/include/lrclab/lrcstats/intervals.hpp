#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrclab/seqcore/series.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::stats {

inline constexpr std::size_t kDefaultRarity = 16;

/// Picks the rarest types until their total count reaches floor(M / rarity).
///
/// Types are visited by ascending total frequency, ties by first occurrence;
/// accumulation stops at the first type that brings the total to the target
/// or beyond, so the set overshoots by at most one type. Returned ids are
/// sorted ascending.
[[nodiscard]] std::vector<SymbolId> select_rare_set(const TokenSequence& seq,
                                                    std::size_t rarity = kDefaultRarity);

/// 0-based positions where any id of `rare` occurs.
[[nodiscard]] std::vector<std::size_t> occurrence_positions(const TokenSequence& seq,
                                                            std::span<const SymbolId> rare);

/// Successive position differences of the merged rare-token occurrences.
/// Throws DataError("insufficient occurrences") below two occurrences.
[[nodiscard]] IntervalSequence extract_intervals(const TokenSequence& seq,
                                                 std::span<const SymbolId> rare,
                                                 std::size_t rarity = kDefaultRarity);

}  // namespace lrc::stats
