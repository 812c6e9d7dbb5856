#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "cartsum/types.hpp"

namespace cartsum {

class LazySource;

/// Snapshot of one node of the selector tree.
struct NodeStats {
  bool is_leaf = false;
  std::size_t level = 0;       // root is 0
  std::size_t span_begin = 0;  // first input vector covered
  std::size_t span_end = 0;    // one past the last input vector covered
  std::uint64_t pops = 0;      // values this node has emitted to its parent (or caller)
  std::size_t realized_left = 0;
  std::size_t realized_right = 0;
  std::size_t fringe_size = 0;
  std::size_t peak_fringe_size = 0;
};

/// Hierarchical top-k over X_1 + ... + X_m.
///
/// A balanced binary tree whose leaves serve one input vector each in
/// non-increasing order and whose internal nodes are lazy pairwise
/// Cartesian-sum heaps. A node realizes a child's next value only when a
/// fringe successor needs it, so each child has delivered at most one value
/// more than the node itself has emitted.
///
/// A node covering vectors [b, e) hands its left child [b, b + ceil(w/2)).
class TreeSelector {
 public:
  explicit TreeSelector(std::span<const Vector> vectors, SelectOptions options = {});
  ~TreeSelector();

  TreeSelector(TreeSelector&&) noexcept;
  TreeSelector& operator=(TreeSelector&&) noexcept;

  /// Next-largest sum, or nullopt once every tuple has been emitted.
  std::optional<IndexedValue> next();

  std::size_t dimensions() const noexcept { return dimensions_; }
  std::size_t depth() const noexcept;

  /// Pre-order walk over every node (parent, left subtree, right subtree).
  void visit(const std::function<void(const NodeStats&)>& fn) const;

  static constexpr std::size_t kBytesPerEntry = sizeof(double) + 2 * sizeof(Index);
  InstrumentationCounters counters() const noexcept;

 private:
  std::size_t dimensions_ = 0;
  std::unique_ptr<FringeMeter> meter_;
  std::unique_ptr<LazySource> root_;
};

/// The k largest sums of the Cartesian sum, by the hierarchical method.
/// Same contract as tensor_top_k.
TopKResult tree_top_k(std::span<const Vector> vectors, std::size_t k, SelectOptions options = {});

}  // namespace cartsum
