#include "cartsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "cartsum/errors.hpp"

namespace cartsum {

std::vector<Vector> generate_instance(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m == 0 || n == 0) throw DomainError("generate_instance: m and n must be at least 1");
  SplitMix64 rng(seed);
  std::vector<Vector> vectors(m, Vector(n));
  for (Vector& v : vectors) {
    for (double& x : v) x = rng.next_open_unit();
  }
  return vectors;
}

Measurement measure(Method method, std::span<const Vector> vectors, std::size_t k, std::size_t repeats) {
  using Clock = std::chrono::steady_clock;
  Measurement out;
  out.wall_seconds = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
    const auto start = Clock::now();
    TopKResult result = top_k(method, vectors, k);
    const auto stop = Clock::now();
    out.wall_seconds = std::min(out.wall_seconds, std::chrono::duration<double>(stop - start).count());
    out.result = std::move(result);
  }
  return out;
}

}  // namespace cartsum
