#include "cartsum/sorted_axis.hpp"

#include <algorithm>
#include <numeric>

namespace cartsum {

SortedAxis SortedAxis::from(const Vector& v) {
  SortedAxis axis;
  axis.order.resize(v.size());
  std::iota(axis.order.begin(), axis.order.end(), Index{0});
  std::stable_sort(axis.order.begin(), axis.order.end(), [&v](Index a, Index b) { return v[a] > v[b]; });
  axis.values.reserve(v.size());
  for (Index i : axis.order) axis.values.push_back(v[i]);
  return axis;
}

}  // namespace cartsum
