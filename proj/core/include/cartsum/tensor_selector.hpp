#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "cartsum/max_index_heap.hpp"
#include "cartsum/sorted_axis.hpp"
#include "cartsum/types.hpp"

namespace cartsum {

/// Best-first enumeration over the implicit m-dimensional tensor of sums.
///
/// The fringe holds position tuples (positions into the sorted axes). Popping
/// tuple p pushes each in-bounds successor p + e_d that has not been pushed
/// before; a visited set keyed on the tuple suppresses duplicates. The tensor
/// itself is never materialized.
class TensorSelector {
 public:
  explicit TensorSelector(std::span<const Vector> vectors, SelectOptions options = {});

  TensorSelector(const TensorSelector&) = delete;
  TensorSelector& operator=(const TensorSelector&) = delete;

  /// Next-largest sum, or nullopt once every tuple has been emitted.
  std::optional<IndexedValue> next();

  /// Sorted-axis positions of the tuple most recently returned by next().
  std::span<const Index> last_positions() const noexcept { return last_positions_; }

  std::size_t dimensions() const noexcept { return axes_.size(); }
  std::size_t fringe_size() const noexcept { return fringe_.size(); }
  std::size_t visited_count() const noexcept { return visited_.size(); }

  std::size_t bytes_per_entry() const noexcept;
  InstrumentationCounters counters() const noexcept { return meter_.counters(bytes_per_entry()); }

 private:
  using TupleId = std::size_t;

  struct TupleHash {
    const TensorSelector* owner;
    std::size_t operator()(TupleId id) const noexcept;
  };
  struct TupleEq {
    const TensorSelector* owner;
    bool operator()(TupleId a, TupleId b) const noexcept;
  };

  std::span<const Index> tuple(TupleId id) const noexcept {
    return {arena_.data() + id * axes_.size(), axes_.size()};
  }
  double sum_at(std::span<const Index> positions) const noexcept;
  // Appends the tuple already staged at the arena tail if it is new.
  void try_push_staged();

  std::vector<SortedAxis> axes_;
  std::vector<Index> arena_;
  std::unordered_set<TupleId, TupleHash, TupleEq> visited_;
  FringeMeter meter_;
  MaxIndexHeap<TupleId> fringe_;
  std::vector<Index> last_positions_;
};

/// The k largest sums of the Cartesian sum, by the direct m-dimensional fringe.
/// k is clamped to the number of sums.
TopKResult tensor_top_k(std::span<const Vector> vectors, std::size_t k, SelectOptions options = {});

}  // namespace cartsum
