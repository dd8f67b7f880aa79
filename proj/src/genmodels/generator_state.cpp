#include "lrclab/genmodels/generator_state.hpp"

#include <cmath>
#include <stdexcept>

namespace lrc::gen {

GeneratorState::GeneratorState(std::size_t capacity, std::optional<double> discount)
    : discount_(discount), index_(discount ? capacity : 0) {
  if (discount_ && !(*discount_ >= 0.0 && *discount_ < 1.0)) {
    throw std::invalid_argument("discount must lie in [0, 1)");
  }
  history_.reserve(capacity);
  history_.push_back(0);
  counts_.push_back(1);
  if (discount_) index_.push_back(1.0 - *discount_);
}

GeneratorState GeneratorState::from_history(std::span<const SymbolId> history,
                                            std::optional<double> discount) {
  if (history.empty() || history.front() != 0) {
    throw std::invalid_argument("history must start with type 0");
  }
  GeneratorState state(history.size(), discount);
  for (std::size_t i = 1; i < history.size(); ++i) {
    const SymbolId id = history[i];
    if (id == state.vocabulary()) {
      state.emit_new();
    } else if (id < state.vocabulary()) {
      state.emit(id);
    } else {
      throw std::invalid_argument("history ids must follow first-occurrence order");
    }
  }
  return state;
}

SymbolId GeneratorState::emit_new() {
  const auto id = static_cast<SymbolId>(counts_.size());
  counts_.push_back(1);
  history_.push_back(id);
  if (discount_) index_.push_back(1.0 - *discount_);
  return id;
}

void GeneratorState::emit(SymbolId id) {
  ++counts_.at(id);
  history_.push_back(id);
  if (discount_) index_.add(id, 1.0);
}

SymbolId GeneratorState::sample_past_uniform(Rng& rng) const {
  return history_[rng.below(history_.size())];
}

double GeneratorState::total_weight() const {
  if (!discount_) throw std::logic_error("state has no weight index");
  return static_cast<double>(steps()) - *discount_ * static_cast<double>(vocabulary());
}

SymbolId GeneratorState::weighted_at(double u) const {
  if (!discount_) throw std::logic_error("state has no weight index");
  return static_cast<SymbolId>(index_.find(u));
}

SymbolId GeneratorState::sample_weighted(Rng& rng) const {
  return weighted_at(rng.uniform() * total_weight());
}

bool GeneratorState::consistent() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) {
    if (c == 0) return false;
    sum += c;
  }
  if (sum != steps() || vocabulary() > steps()) return false;
  if (discount_) {
    if (index_.size() != counts_.size()) return false;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      const double expected = static_cast<double>(counts_[i]) - *discount_;
      if (std::abs(index_.weight(i) - expected) > 1e-9 * static_cast<double>(counts_[i])) return false;
    }
  }
  return true;
}

TokenSequence GeneratorState::into_sequence() && {
  const std::size_t k = counts_.size();
  return TokenSequence(std::move(history_), k);
}

}  // namespace lrc::gen
