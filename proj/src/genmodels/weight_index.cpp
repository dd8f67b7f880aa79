#include "lrclab/genmodels/weight_index.hpp"

#include <stdexcept>

namespace lrc::gen {

WeightIndex::WeightIndex(std::size_t capacity) : tree_(capacity + 1, 0.0) {
  weights_.reserve(capacity);
}

void WeightIndex::rebuild(std::size_t capacity) {
  tree_.assign(capacity + 1, 0.0);
  for (std::size_t i = 1; i <= weights_.size(); ++i) {
    tree_[i] += weights_[i - 1];
    const std::size_t parent = i + (i & (~i + 1));
    if (parent <= capacity) tree_[parent] += tree_[i];
  }
}

void WeightIndex::push_back(double w) {
  const std::size_t capacity = tree_.size() - 1;
  if (weights_.size() == capacity) {
    weights_.push_back(0.0);
    rebuild(capacity == 0 ? 16 : capacity * 2);
  } else {
    weights_.push_back(0.0);
  }
  add(weights_.size() - 1, w);
}

void WeightIndex::add(std::size_t i, double delta) {
  if (i >= weights_.size()) throw std::out_of_range("weight slot out of range");
  weights_[i] += delta;
  for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] += delta;
}

double WeightIndex::prefix(std::size_t count) const {
  double sum = 0.0;
  for (std::size_t k = count; k > 0; k -= k & (~k + 1)) sum += tree_[k];
  return sum;
}

std::size_t WeightIndex::find(double u) const {
  if (weights_.empty()) throw std::out_of_range("find on empty weight index");
  const std::size_t n = tree_.size() - 1;
  std::size_t step = 1;
  while (step * 2 <= n) step *= 2;
  std::size_t pos = 0;
  for (; step > 0; step /= 2) {
    if (pos + step <= n && tree_[pos + step] <= u) {
      pos += step;
      u -= tree_[pos];
    }
  }
  return pos < weights_.size() ? pos : weights_.size() - 1;
}

}  // namespace lrc::gen
