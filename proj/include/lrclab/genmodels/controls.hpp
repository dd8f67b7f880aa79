#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::gen {

/// Cumulative weights sum_{v<=u} v^-exponent for u = 1..vocab_size.
[[nodiscard]] std::vector<double> zipf_cumulative(std::size_t vocab_size, double exponent);

/// i.i.d. ranks from p(u) ~ u^-exponent by inverse-CDF binary search, ids
/// relabeled in first-occurrence order.
[[nodiscard]] TokenSequence generate_zipf_iid(std::size_t vocab_size, double exponent,
                                              std::size_t length, std::uint64_t seed);

/// First-order Markov resample of `corpus`. The first token and every
/// restart are drawn from the unigram distribution; a restart happens after
/// a type with no recorded successor. Symbols are carried over.
[[nodiscard]] TokenSequence generate_bigram(const TokenSequence& corpus, std::size_t length,
                                            std::uint64_t seed);

/// Fisher-Yates permutation of the tokens; ids and symbols unchanged.
[[nodiscard]] TokenSequence shuffle(const TokenSequence& seq, std::uint64_t seed);

}  // namespace lrc::gen
