#pragma once

#include <cstdint>
#include <random>

namespace lrc::gen {

/// Portable seeded generator: the standard-specified mt19937_64 engine with
/// explicit conversions, so the same seed yields the same draws everywhere.
///
///  - uniform(): top 53 bits of one engine output scaled by 2^-53, in [0, 1).
///  - below(n): rejection sampling on engine outputs below the largest
///    multiple of n, then reduction mod n. Unbiased.
///
/// std::*_distribution objects are avoided since their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lrc::gen
