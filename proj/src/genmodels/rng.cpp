#include "lrclab/genmodels/rng.hpp"

#include <stdexcept>

namespace lrc::gen {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  // Outputs below `threshold` would over-represent the low residues.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % n;
  }
}

}  // namespace lrc::gen
