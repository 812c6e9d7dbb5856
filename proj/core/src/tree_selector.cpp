#include "cartsum/tree_selector.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "cartsum/max_index_heap.hpp"

namespace cartsum {

/// Anything that emits IndexedValues in non-increasing order on request.
class LazySource {
 public:
  LazySource(std::size_t span_begin, std::size_t span_end) : span_begin_(span_begin), span_end_(span_end) {}
  virtual ~LazySource() = default;

  virtual std::optional<IndexedValue> pop_next() = 0;
  virtual void visit(std::size_t level, const std::function<void(const NodeStats&)>& fn) const = 0;
  virtual std::size_t height() const noexcept = 0;

 protected:
  std::size_t span_begin_;
  std::size_t span_end_;
  std::uint64_t pops_ = 0;
};

namespace {

/// Serves one input vector in non-increasing order.
///
/// The vector is heapified once and sorted incrementally: only the prefix a
/// parent has actually asked for is ever ordered. For accounting, the next
/// unserved position counts as one live fringe entry.
class LeafSource final : public LazySource {
 public:
  LeafSource(const Vector& values, std::size_t dimension, FringeMeter* meter)
      : LazySource(dimension, dimension + 1), values_(values), meter_(meter) {
    pending_.resize(values.size());
    for (std::size_t i = 0; i < pending_.size(); ++i) pending_[i] = static_cast<Index>(i);
    std::make_heap(pending_.begin(), pending_.end(), before());
    if (meter_ && !pending_.empty()) meter_->on_push();
  }

  std::optional<IndexedValue> pop_next() override {
    if (pending_.empty()) return std::nullopt;
    std::pop_heap(pending_.begin(), pending_.end(), before());
    const Index original = pending_.back();
    pending_.pop_back();
    sorted_values_.push_back(values_[original]);
    order_.push_back(original);
    ++pops_;
    if (meter_) {
      meter_->on_pop();
      if (!pending_.empty()) meter_->on_push();
    }
    return IndexedValue{sorted_values_.back(), {original}};
  }

  void visit(std::size_t level, const std::function<void(const NodeStats&)>& fn) const override {
    NodeStats s;
    s.is_leaf = true;
    s.level = level;
    s.span_begin = span_begin_;
    s.span_end = span_end_;
    s.pops = pops_;
    s.fringe_size = pending_.empty() ? 0 : 1;
    s.peak_fringe_size = values_.empty() ? 0 : 1;
    fn(s);
  }

  std::size_t height() const noexcept override { return 0; }

 private:
  // Heap comparator: larger value first, then smaller original index.
  struct Before {
    const Vector* v;
    bool operator()(Index a, Index b) const {
      if ((*v)[a] != (*v)[b]) return (*v)[a] < (*v)[b];
      return a > b;
    }
  };
  Before before() const { return Before{&values_}; }

  Vector values_;
  FringeMeter* meter_;
  std::vector<Index> pending_;
  // Served prefix of the sorted vector and its map back to original indices.
  std::vector<double> sorted_values_;
  std::vector<Index> order_;
};

/// Lazy heap over the Cartesian sum of two ordered children.
///
/// Fringe cell (i, j) stands for realized_left_[i] + realized_right_[j].
/// After popping (i, j) the node pushes (i + 1, j), and (i, j + 1) only from
/// row 0, so every cell has exactly one predecessor and no visited set is
/// needed.
class PairNode final : public LazySource {
 public:
  struct Cell {
    Index left;
    Index right;
  };

  PairNode(std::unique_ptr<LazySource> left, std::unique_ptr<LazySource> right, std::size_t span_begin,
           std::size_t span_end, FringeMeter* meter)
      : LazySource(span_begin, span_end), left_(std::move(left)), right_(std::move(right)), fringe_(meter) {
    if (realize(Side::kLeft, 0) && realize(Side::kRight, 0)) push(0, 0);
  }

  std::optional<IndexedValue> pop_next() override {
    if (fringe_.empty()) return std::nullopt;
    const auto top = fringe_.pop_max();
    const Index i = top.payload.left;
    const Index j = top.payload.right;
    ++pops_;

    const IndexedValue& a = realized_left_[i];
    const IndexedValue& b = realized_right_[j];
    IndexedValue out;
    out.value = top.key;
    out.indices.reserve(a.indices.size() + b.indices.size());
    out.indices.insert(out.indices.end(), a.indices.begin(), a.indices.end());
    out.indices.insert(out.indices.end(), b.indices.begin(), b.indices.end());

    if (realize(Side::kLeft, i + 1)) push(i + 1, j);
    if (i == 0 && realize(Side::kRight, j + 1)) push(i, j + 1);
    return out;
  }

  void visit(std::size_t level, const std::function<void(const NodeStats&)>& fn) const override {
    NodeStats s;
    s.level = level;
    s.span_begin = span_begin_;
    s.span_end = span_end_;
    s.pops = pops_;
    s.realized_left = realized_left_.size();
    s.realized_right = realized_right_.size();
    s.fringe_size = fringe_.size();
    s.peak_fringe_size = peak_fringe_;
    fn(s);
    left_->visit(level + 1, fn);
    right_->visit(level + 1, fn);
  }

  std::size_t height() const noexcept override { return 1 + std::max(left_->height(), right_->height()); }

 private:
  enum class Side { kLeft, kRight };

  // Makes position `pos` of one child available, pulling from the child only
  // if it is the next unrealized position. False if the child is exhausted.
  bool realize(Side side, std::size_t pos) {
    auto& realized = side == Side::kLeft ? realized_left_ : realized_right_;
    if (pos < realized.size()) return true;
    bool& done = side == Side::kLeft ? left_done_ : right_done_;
    if (done) return false;
    auto next = (side == Side::kLeft ? left_ : right_)->pop_next();
    if (!next) {
      done = true;
      return false;
    }
    realized.push_back(std::move(*next));
    return true;
  }

  void push(std::size_t i, std::size_t j) {
    fringe_.push(realized_left_[i].value + realized_right_[j].value,
                 Cell{static_cast<Index>(i), static_cast<Index>(j)});
    peak_fringe_ = std::max(peak_fringe_, fringe_.size());
  }

  std::unique_ptr<LazySource> left_;
  std::unique_ptr<LazySource> right_;
  std::vector<IndexedValue> realized_left_;
  std::vector<IndexedValue> realized_right_;
  bool left_done_ = false;
  bool right_done_ = false;
  MaxIndexHeap<Cell> fringe_;
  std::size_t peak_fringe_ = 0;
};

std::unique_ptr<LazySource> build(std::span<const Vector> vectors, std::size_t begin, std::size_t end,
                                  FringeMeter* meter) {
  if (end - begin == 1) return std::make_unique<LeafSource>(vectors[begin], begin, meter);
  const std::size_t mid = begin + (end - begin + 1) / 2;
  auto left = build(vectors, begin, mid, meter);
  auto right = build(vectors, mid, end, meter);
  return std::make_unique<PairNode>(std::move(left), std::move(right), begin, end, meter);
}

}  // namespace

TreeSelector::TreeSelector(std::span<const Vector> vectors, SelectOptions options) {
  validate_vectors(vectors);
  dimensions_ = vectors.size();
  meter_ = std::make_unique<FringeMeter>();
  root_ = build(vectors, 0, vectors.size(), options.instrument ? meter_.get() : nullptr);
}

TreeSelector::~TreeSelector() = default;
TreeSelector::TreeSelector(TreeSelector&&) noexcept = default;
TreeSelector& TreeSelector::operator=(TreeSelector&&) noexcept = default;

std::optional<IndexedValue> TreeSelector::next() { return root_->pop_next(); }

std::size_t TreeSelector::depth() const noexcept { return root_->height(); }

void TreeSelector::visit(const std::function<void(const NodeStats&)>& fn) const { root_->visit(0, fn); }

InstrumentationCounters TreeSelector::counters() const noexcept { return meter_->counters(kBytesPerEntry); }

TopKResult tree_top_k(std::span<const Vector> vectors, std::size_t k, SelectOptions options) {
  TreeSelector selector(vectors, options);
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
