#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cartsum {

/// Position in an original (unsorted) input vector.
using Index = std::uint32_t;

/// One input vector X_d.
using Vector = std::vector<double>;

/// A sum X_1[i_1] + ... + X_m[i_m] together with the index tuple that produced it.
struct IndexedValue {
  double value = 0.0;
  std::vector<Index> indices;
};

/// Operation counts collected while an engine runs.
///
/// peak_fringe_entries is the maximum number of entries live at the same
/// time across every heap owned by the engine, not the per-heap maximum.
struct InstrumentationCounters {
  std::uint64_t heap_pushes = 0;
  std::uint64_t heap_pops = 0;
  std::uint64_t peak_fringe_entries = 0;
  std::uint64_t peak_entry_bytes_estimate = 0;
};

struct TopKResult {
  std::vector<IndexedValue> items;  // non-increasing by value
  InstrumentationCounters counters;
};

/// Shared accounting sink for a group of heaps. Heaps holding a pointer to
/// the same meter contribute to one live-entry total.
class FringeMeter {
 public:
  void on_push() noexcept {
    ++pushes_;
    ++live_;
    if (live_ > peak_live_) peak_live_ = live_;
  }
  void on_pop() noexcept {
    ++pops_;
    --live_;
  }

  std::uint64_t pushes() const noexcept { return pushes_; }
  std::uint64_t pops() const noexcept { return pops_; }
  std::uint64_t live() const noexcept { return live_; }
  std::uint64_t peak_live() const noexcept { return peak_live_; }

  InstrumentationCounters counters(std::size_t bytes_per_entry) const noexcept {
    return {pushes_, pops_, peak_live_, peak_live_ * bytes_per_entry};
  }

 private:
  std::uint64_t pushes_ = 0;
  std::uint64_t pops_ = 0;
  std::uint64_t live_ = 0;
  std::uint64_t peak_live_ = 0;
};

/// Engine knobs shared by every selector.
struct SelectOptions {
  // When false, no meter is attached and counters stay zero.
  bool instrument = true;
};

/// Throws DomainError unless there is at least one vector, every vector is
/// nonempty, shorter than 2^32 entries, and every entry is finite.
void validate_vectors(std::span<const Vector> vectors);

/// Product of vector lengths, saturating at SIZE_MAX.
std::size_t cartesian_size(std::span<const Vector> vectors) noexcept;

}  // namespace cartsum
