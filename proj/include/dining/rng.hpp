#ifndef DINING_RNG_HPP
#define DINING_RNG_HPP

#include <cstdint>
#include <random>

namespace dining {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling keeps the draw unbiased
/// and, unlike std::uniform_int_distribution, identical across standard
/// library implementations.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace dining

#endif  // DINING_RNG_HPP
