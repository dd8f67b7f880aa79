#pragma once

#include "lrclab/seqcore/series.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::stats {

/// Frequencies by descending count, ties broken by first occurrence.
[[nodiscard]] RankFrequency rank_frequency(const TokenSequence& seq);

/// Vocabulary size V(m) at m on the 20-per-decade grid, always ending at M.
[[nodiscard]] TypeTokenCurve type_token_curve(const TokenSequence& seq);

}  // namespace lrc::stats
