#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cartsum/engine.hpp"
#include "cartsum/types.hpp"

namespace cartsum {

/// SplitMix64. Each call advances the state by 0x9E3779B97F4A7C15 and
/// returns the mixed state; the stream is fully determined by the seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in the open interval (0, 1): ((next() >> 11) + 0.5) / 2^53.
  double next_open_unit() noexcept { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// m vectors of n i.i.d. uniform (0, 1) values, drawn vector by vector from
/// one SplitMix64 stream seeded with `seed`.
std::vector<Vector> generate_instance(std::size_t m, std::size_t n, std::uint64_t seed);

struct Measurement {
  TopKResult result;
  double wall_seconds = 0.0;
};

/// Runs the engine `repeats` times (at least once) and reports the minimum
/// wall time. Only the engine call is timed. The returned result is the one
/// from the last run.
Measurement measure(Method method, std::span<const Vector> vectors, std::size_t k, std::size_t repeats = 1);

}  // namespace cartsum
