#pragma once

#include <vector>

#include "cartsum/types.hpp"

namespace cartsum {

/// An input vector sorted non-increasing, with `order[p]` the original index
/// of sorted position p. Equal values keep their original relative order.
struct SortedAxis {
  std::vector<double> values;
  std::vector<Index> order;

  static SortedAxis from(const Vector& v);
  std::size_t size() const noexcept { return values.size(); }
};

}  // namespace cartsum
