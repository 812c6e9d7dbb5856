#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "cartsum/errors.hpp"
#include "cartsum/types.hpp"

namespace cartsum {

/// Array-embedded binary max-heap of (key, payload) entries.
///
/// Keys must be finite. Order among equal keys is unspecified. An optional
/// FringeMeter receives one notification per push and per pop.
template <typename Payload>
class MaxIndexHeap {
 public:
  struct Entry {
    double key;
    Payload payload;
  };

  MaxIndexHeap() = default;
  explicit MaxIndexHeap(FringeMeter* meter) : meter_(meter) {}

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  void reserve(std::size_t n) { entries_.reserve(n); }

  void push(double key, Payload payload) {
    if (!std::isfinite(key)) {
      throw DomainError("MaxIndexHeap: key must be finite");
    }
    entries_.push_back(Entry{key, std::move(payload)});
    sift_up(entries_.size() - 1);
    if (meter_) meter_->on_push();
  }

  const Entry& top() const {
    if (entries_.empty()) throw UsageError("MaxIndexHeap: top() on empty heap");
    return entries_.front();
  }

  Entry pop_max() {
    if (entries_.empty()) throw UsageError("MaxIndexHeap: pop_max() on empty heap");
    Entry out = std::move(entries_.front());
    if (entries_.size() > 1) {
      entries_.front() = std::move(entries_.back());
      entries_.pop_back();
      sift_down(0);
    } else {
      entries_.pop_back();
    }
    if (meter_) meter_->on_pop();
    return out;
  }

  /// True when every parent key is >= its children's keys.
  bool is_heap() const noexcept {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[(i - 1) / 2].key < entries_[i].key) return false;
    }
    return true;
  }

 private:
  void sift_up(std::size_t i) {
    Entry moving = std::move(entries_[i]);
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!(entries_[parent].key < moving.key)) break;
      entries_[i] = std::move(entries_[parent]);
      i = parent;
    }
    entries_[i] = std::move(moving);
  }

  void sift_down(std::size_t i) {
    const std::size_t n = entries_.size();
    Entry moving = std::move(entries_[i]);
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && entries_[child].key < entries_[child + 1].key) ++child;
      if (!(moving.key < entries_[child].key)) break;
      entries_[i] = std::move(entries_[child]);
      i = child;
    }
    entries_[i] = std::move(moving);
  }

  std::vector<Entry> entries_;
  FringeMeter* meter_ = nullptr;
};

}  // namespace cartsum
