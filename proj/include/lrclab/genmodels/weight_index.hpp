#pragma once

#include <cstddef>
#include <vector>

namespace lrc::gen {

/// Fenwick tree over non-negative real weights. Point updates, prefix sums
/// and inverse-prefix search are O(log n); the slot count grows on demand.
class WeightIndex {
 public:
  explicit WeightIndex(std::size_t capacity = 16);

  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
  [[nodiscard]] double weight(std::size_t i) const { return weights_.at(i); }

  /// Appends a slot holding `w`.
  void push_back(double w);
  void add(std::size_t i, double delta);

  /// Sum of the first `count` weights.
  [[nodiscard]] double prefix(std::size_t count) const;
  [[nodiscard]] double total() const { return prefix(weights_.size()); }

  /// Smallest i with prefix(i + 1) > u, clamped to the last slot so rounding
  /// at the upper end cannot run past it. Requires size() > 0.
  [[nodiscard]] std::size_t find(double u) const;

 private:
  void rebuild(std::size_t capacity);

  std::vector<double> tree_;  // 1-based Fenwick array, tree_.size() == capacity + 1
  std::vector<double> weights_;
};

}  // namespace lrc::gen
