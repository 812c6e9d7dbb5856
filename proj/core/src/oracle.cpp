#include "cartsum/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cartsum/errors.hpp"

namespace cartsum {

TopKResult brute_force_top_k(std::span<const Vector> vectors, std::size_t k, std::size_t cap) {
  validate_vectors(vectors);
  const std::size_t total = cartesian_size(vectors);
  if (total > cap) {
    throw SizeError("instance too large for oracle: " + std::to_string(total) + " sums exceed cap " +
                    std::to_string(cap));
  }
  const std::size_t m = vectors.size();

  // Ordinal o encodes the tuple in mixed radix with dimension 0 most
  // significant, so ascending ordinal is ascending lexicographic tuple order.
  struct Cell {
    double value;
    std::size_t ordinal;
  };
  std::vector<Cell> cells;
  cells.reserve(total);
  std::vector<std::size_t> pos(m, 0);
  for (std::size_t ordinal = 0; ordinal < total; ++ordinal) {
    double sum = 0.0;
    for (std::size_t d = 0; d < m; ++d) sum += vectors[d][pos[d]];
    cells.push_back({sum, ordinal});
    for (std::size_t d = m; d-- > 0;) {
      if (++pos[d] < vectors[d].size()) break;
      pos[d] = 0;
    }
  }

  const std::size_t take = std::min(k, total);
  auto before = [](const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.ordinal < b.ordinal;
  };
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(take), cells.end(), before);

  TopKResult result;
  result.items.reserve(take);
  for (std::size_t r = 0; r < take; ++r) {
    IndexedValue item;
    item.value = cells[r].value;
    item.indices.assign(m, 0);
    std::size_t rest = cells[r].ordinal;
    for (std::size_t d = m; d-- > 0;) {
      item.indices[d] = static_cast<Index>(rest % vectors[d].size());
      rest /= vectors[d].size();
    }
    result.items.push_back(std::move(item));
  }
  return result;
}

}  // namespace cartsum
