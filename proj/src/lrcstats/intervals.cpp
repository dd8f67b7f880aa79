#include "lrclab/lrcstats/intervals.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lrclab/seqcore/error.hpp"

namespace lrc::stats {

std::vector<SymbolId> select_rare_set(const TokenSequence& seq, std::size_t rarity) {
  if (rarity < 2) throw std::invalid_argument("rarity divisor must be at least 2");
  const std::size_t total = seq.size();
  if (total < rarity) throw DataError("sequence too short");

  const std::size_t vocab = seq.vocabulary_size();
  std::vector<std::size_t> freq(vocab, 0);
  std::vector<std::size_t> first(vocab, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < total; ++i) {
    const SymbolId id = seq[i];
    if (freq[id]++ == 0) first[id] = i;
  }

  std::vector<SymbolId> order;
  order.reserve(vocab);
  for (SymbolId id = 0; id < vocab; ++id) {
    if (freq[id] > 0) order.push_back(id);
  }
  std::sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) {
    if (freq[a] != freq[b]) return freq[a] < freq[b];
    return first[a] < first[b];
  });

  const std::size_t target = total / rarity;
  std::vector<SymbolId> rare;
  std::size_t covered = 0;
  for (SymbolId id : order) {
    if (covered >= target) break;
    rare.push_back(id);
    covered += freq[id];
  }
  std::sort(rare.begin(), rare.end());
  return rare;
}

std::vector<std::size_t> occurrence_positions(const TokenSequence& seq,
                                              std::span<const SymbolId> rare) {
  std::vector<bool> is_rare(seq.vocabulary_size(), false);
  for (SymbolId id : rare) {
    if (id >= seq.vocabulary_size()) throw std::invalid_argument("rare id outside vocabulary");
    is_rare[id] = true;
  }
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (is_rare[seq[i]]) positions.push_back(i);
  }
  return positions;
}

IntervalSequence extract_intervals(const TokenSequence& seq, std::span<const SymbolId> rare,
                                   std::size_t rarity) {
  const auto positions = occurrence_positions(seq, rare);
  if (positions.size() < 2) throw DataError("insufficient occurrences");
  std::vector<std::int64_t> gaps(positions.size() - 1);
  for (std::size_t i = 1; i < positions.size(); ++i) {
    gaps[i - 1] = static_cast<std::int64_t>(positions[i] - positions[i - 1]);
  }
  return IntervalSequence(std::move(gaps), rarity);
}

}  // namespace lrc::stats
