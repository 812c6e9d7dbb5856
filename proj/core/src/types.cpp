#include "cartsum/types.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cartsum/errors.hpp"

namespace cartsum {

void validate_vectors(std::span<const Vector> vectors) {
  if (vectors.empty()) throw DomainError("at least one input vector is required");
  for (std::size_t d = 0; d < vectors.size(); ++d) {
    const Vector& v = vectors[d];
    if (v.empty()) throw DomainError("input vector " + std::to_string(d) + " is empty");
    if (v.size() > std::numeric_limits<Index>::max()) {
      throw DomainError("input vector " + std::to_string(d) + " is too long");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i])) {
        throw DomainError("input vector " + std::to_string(d) + " has a non-finite entry at position " +
                          std::to_string(i));
      }
    }
  }
}

std::size_t cartesian_size(std::span<const Vector> vectors) noexcept {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (const Vector& v : vectors) {
    if (v.empty()) return 0;
    if (total > kMax / v.size()) return kMax;
    total *= v.size();
  }
  return total;
}

}  // namespace cartsum
