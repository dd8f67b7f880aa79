#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrclab/genmodels/rng.hpp"
#include "lrclab/genmodels/weight_index.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::gen {

/// Evolving state (t, K_t, S_{t,i}) of the generative models, plus the
/// emitted history.
///
/// The state starts with one element of type 0 already emitted, so t counts
/// every element including that first one and sum_i S_{t,i} == t always.
/// When a discount d is given, a WeightIndex over S_{t,i} - d is kept up to
/// date for weighted draws.
class GeneratorState {
 public:
  explicit GeneratorState(std::size_t capacity = 1, std::optional<double> discount = std::nullopt);

  /// Rebuilds the state reached after `history`, whose ids must be dense
  /// and in first-occurrence order (0, then 0 or 1, ...).
  [[nodiscard]] static GeneratorState from_history(std::span<const SymbolId> history,
                                                   std::optional<double> discount = std::nullopt);

  [[nodiscard]] std::size_t steps() const noexcept { return history_.size(); }
  [[nodiscard]] std::size_t vocabulary() const noexcept { return counts_.size(); }
  [[nodiscard]] std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  [[nodiscard]] std::span<const SymbolId> history() const noexcept { return history_; }

  SymbolId emit_new();
  void emit(SymbolId id);

  /// Uniform draw over past positions, i.e. a type drawn with probability
  /// S_{t,i} / t.
  [[nodiscard]] SymbolId sample_past_uniform(Rng& rng) const;

  [[nodiscard]] bool has_weight_index() const noexcept { return discount_.has_value(); }
  /// Sum of S_{t,i} - discount, tracked exactly as t - discount * K.
  [[nodiscard]] double total_weight() const;
  /// Type whose cumulative discounted weight first exceeds u.
  [[nodiscard]] SymbolId weighted_at(double u) const;
  [[nodiscard]] SymbolId sample_weighted(Rng& rng) const;

  /// Full O(K) check: counts sum to t, every S_i >= 1, K <= t, and the
  /// weight index (if any) agrees with the counts.
  [[nodiscard]] bool consistent() const;

  [[nodiscard]] TokenSequence into_sequence() &&;

 private:
  std::vector<SymbolId> history_;
  std::vector<std::uint64_t> counts_;
  std::optional<double> discount_;
  WeightIndex index_;
};

}  // namespace lrc::gen
