#include "lrclab/lrcstats/scaling.hpp"

#include <algorithm>
#include <limits>

#include "lrclab/lrcstats/log_grid.hpp"

namespace lrc::stats {

RankFrequency rank_frequency(const TokenSequence& seq) {
  const std::size_t vocab = seq.vocabulary_size();
  std::vector<std::uint64_t> freq(vocab, 0);
  std::vector<std::size_t> first(vocab, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (freq[seq[i]]++ == 0) first[seq[i]] = i;
  }
  std::vector<SymbolId> order;
  for (SymbolId id = 0; id < vocab; ++id) {
    if (freq[id] > 0) order.push_back(id);
  }
  std::sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) {
    if (freq[a] != freq[b]) return freq[a] > freq[b];
    return first[a] < first[b];
  });
  RankFrequency rf;
  rf.entries.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rf.entries.push_back({r + 1, freq[order[r]]});
  return rf;
}

TypeTokenCurve type_token_curve(const TokenSequence& seq) {
  const auto grid = log_grid_through(seq.size());
  TypeTokenCurve curve;
  curve.samples.reserve(grid.size());
  std::vector<bool> seen(seq.vocabulary_size(), false);
  std::size_t distinct = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seen[seq[i]]) {
      seen[seq[i]] = true;
      ++distinct;
    }
    if (i + 1 == grid[next]) {
      curve.samples.push_back({i + 1, distinct});
      if (++next == grid.size()) break;
    }
  }
  return curve;
}

}  // namespace lrc::stats
