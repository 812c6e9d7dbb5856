#pragma once

#include <cstddef>
#include <span>

#include "cartsum/types.hpp"

namespace cartsum {

inline constexpr std::size_t kDefaultOracleCap = 2'000'000;

/// Enumerates every sum of the Cartesian product, sorts, and truncates to k.
///
/// Ties are ordered by index tuple (lexicographic, ascending) so repeated runs
/// are identical. Sums are accumulated left to right in input order.
/// Throws SizeError when the product of lengths exceeds `cap`.
TopKResult brute_force_top_k(std::span<const Vector> vectors, std::size_t k,
                             std::size_t cap = kDefaultOracleCap);

}  // namespace cartsum
