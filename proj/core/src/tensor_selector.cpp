#include "cartsum/tensor_selector.hpp"

#include <algorithm>
#include <cstdint>

namespace cartsum {

TensorSelector::TensorSelector(std::span<const Vector> vectors, SelectOptions options)
    : visited_(16, TupleHash{this}, TupleEq{this}),
      fringe_(options.instrument ? &meter_ : nullptr) {
  validate_vectors(vectors);
  axes_.reserve(vectors.size());
  for (const Vector& v : vectors) axes_.push_back(SortedAxis::from(v));

  arena_.assign(axes_.size(), 0);
  try_push_staged();
}

std::size_t TensorSelector::bytes_per_entry() const noexcept {
  return sizeof(double) + sizeof(TupleId) + axes_.size() * sizeof(Index);
}

std::size_t TensorSelector::TupleHash::operator()(TupleId id) const noexcept {
  // FNV-1a over the position words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Index p : owner->tuple(id)) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool TensorSelector::TupleEq::operator()(TupleId a, TupleId b) const noexcept {
  auto ta = owner->tuple(a);
  auto tb = owner->tuple(b);
  return std::equal(ta.begin(), ta.end(), tb.begin());
}

double TensorSelector::sum_at(std::span<const Index> positions) const noexcept {
  double sum = 0.0;
  for (std::size_t d = 0; d < axes_.size(); ++d) sum += axes_[d].values[positions[d]];
  return sum;
}

void TensorSelector::try_push_staged() {
  const TupleId id = arena_.size() / axes_.size() - 1;
  if (!visited_.insert(id).second) {
    arena_.resize(arena_.size() - axes_.size());
    return;
  }
  fringe_.push(sum_at(tuple(id)), id);
}

std::optional<IndexedValue> TensorSelector::next() {
  if (fringe_.empty()) return std::nullopt;
  const auto top = fringe_.pop_max();
  const std::size_t m = axes_.size();

  auto popped = tuple(top.payload);
  last_positions_.assign(popped.begin(), popped.end());

  IndexedValue out;
  out.value = top.key;
  out.indices.resize(m);
  for (std::size_t d = 0; d < m; ++d) out.indices[d] = axes_[d].order[last_positions_[d]];

  for (std::size_t d = 0; d < m; ++d) {
    if (last_positions_[d] + 1 >= axes_[d].size()) continue;
    // Stage the successor at the arena tail; try_push_staged keeps or drops it.
    arena_.insert(arena_.end(), last_positions_.begin(), last_positions_.end());
    ++arena_[arena_.size() - m + d];
    try_push_staged();
  }
  return out;
}

TopKResult tensor_top_k(std::span<const Vector> vectors, std::size_t k, SelectOptions options) {
  TensorSelector selector(vectors, options);
  const std::size_t take = std::min(k, cartesian_size(vectors));
  TopKResult result;
  result.items.reserve(take);
  while (result.items.size() < take) {
    auto item = selector.next();
    if (!item) break;
    result.items.push_back(std::move(*item));
  }
  result.counters = selector.counters();
  return result;
}

}  // namespace cartsum
