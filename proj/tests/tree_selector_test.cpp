#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cartsum/errors.hpp"
#include "cartsum/oracle.hpp"
#include "cartsum/tensor_selector.hpp"
#include "cartsum/tree_selector.hpp"
#include "test_support.hpp"

namespace cartsum {
namespace {

using testing::matches_oracle;
using testing::values_of;

std::vector<NodeStats> nodes_of(const TreeSelector& sel) {
  std::vector<NodeStats> out;
  sel.visit([&](const NodeStats& s) { out.push_back(s); });
  return out;
}

// Every node has realized at most one value per child beyond what it has
// emitted, and holds at most that many fringe entries.
::testing::AssertionResult lazy(const TreeSelector& sel) {
  for (const NodeStats& s : nodes_of(sel)) {
    if (s.is_leaf) continue;
    if (s.realized_left > s.pops + 1 || s.realized_right > s.pops + 1) {
      return ::testing::AssertionFailure() << "node [" << s.span_begin << "," << s.span_end << ") realized "
                                           << s.realized_left << "/" << s.realized_right << " after " << s.pops
                                           << " pops";
    }
    if (s.fringe_size > s.pops + 1 || s.peak_fringe_size > s.pops + 1) {
      return ::testing::AssertionFailure() << "node [" << s.span_begin << "," << s.span_end << ") fringe "
                                           << s.fringe_size << " after " << s.pops << " pops";
    }
  }
  return ::testing::AssertionSuccess();
}

TEST(TreeTopology, SingleVectorIsALeaf) {
  const std::vector<Vector> v{{2, 9, 4}};
  TreeSelector sel(v);
  auto nodes = nodes_of(sel);
  ASSERT_EQ(nodes.size(), 1u);
  EXPECT_TRUE(nodes[0].is_leaf);
  EXPECT_EQ(sel.depth(), 0u);
  EXPECT_EQ(sel.next()->value, 9);
  EXPECT_EQ(sel.next()->value, 4);
  EXPECT_EQ(sel.next()->value, 2);
  EXPECT_FALSE(sel.next().has_value());
}

TEST(TreeTopology, FourVectorsBalanced) {
  const std::vector<Vector> v{{1}, {2}, {3}, {4}};
  TreeSelector sel(v);
  auto nodes = nodes_of(sel);
  ASSERT_EQ(nodes.size(), 7u);
  EXPECT_EQ(sel.depth(), 2u);
  // Pre-order: root, left pair, leaf0, leaf1, right pair, leaf2, leaf3.
  EXPECT_FALSE(nodes[0].is_leaf);
  EXPECT_FALSE(nodes[1].is_leaf);
  EXPECT_FALSE(nodes[4].is_leaf);
  for (std::size_t i : {2u, 3u, 5u, 6u}) EXPECT_TRUE(nodes[i].is_leaf);
  EXPECT_EQ(nodes[1].span_begin, 0u);
  EXPECT_EQ(nodes[1].span_end, 2u);
  EXPECT_EQ(nodes[4].span_begin, 2u);
  EXPECT_EQ(nodes[4].span_end, 4u);
}

TEST(TreeTopology, OddSplitGivesLeftTheLargerHalf) {
  const std::vector<Vector> v{{1}, {2}, {3}};
  TreeSelector sel(v);
  auto nodes = nodes_of(sel);
  ASSERT_EQ(nodes.size(), 5u);
  EXPECT_EQ(nodes[0].span_end - nodes[0].span_begin, 3u);
  EXPECT_FALSE(nodes[1].is_leaf);
  EXPECT_EQ(nodes[1].span_begin, 0u);
  EXPECT_EQ(nodes[1].span_end, 2u);
  EXPECT_TRUE(nodes[4].is_leaf);
  EXPECT_EQ(nodes[4].span_begin, 2u);
  EXPECT_EQ(sel.depth(), 2u);
}

TEST(TreeTopology, DepthIsCeilLog2) {
  for (std::size_t m = 1; m <= 33; ++m) {
    std::vector<Vector> v(m, Vector{0.0});
    TreeSelector sel(v);
    std::size_t expected = 0;
    while ((std::size_t{1} << expected) < m) ++expected;
    EXPECT_EQ(sel.depth(), expected) << "m=" << m;
  }
}

TEST(TreeTopology, BuildRealizesOneValuePerChild) {
  const std::vector<Vector> v{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
  TreeSelector sel(v);
  auto nodes = nodes_of(sel);
  // The root has popped nothing: one fringe cell (0, 0) over one value per child.
  EXPECT_EQ(nodes[0].pops, 0u);
  EXPECT_EQ(nodes[0].fringe_size, 1u);
  EXPECT_EQ(nodes[0].realized_left, 1u);
  EXPECT_EQ(nodes[0].realized_right, 1u);
  // The root's children have served exactly the one value the root realized.
  for (const NodeStats& s : nodes) {
    if (s.level == 1) EXPECT_EQ(s.pops, 1u);
  }
  EXPECT_EQ(sel.next()->value, 15);
}

TEST(TreeNode, PairPopsThenExhausts) {
  const std::vector<Vector> v{{3, 1}, {4, 2}};
  TreeSelector sel(v);
  std::vector<double> seen;
  while (auto item = sel.next()) {
    seen.push_back(item->value);
    auto root = nodes_of(sel)[0];
    if (root.pops == 1) EXPECT_LE(root.fringe_size, 2u);
    ASSERT_TRUE(lazy(sel));
  }
  EXPECT_EQ(seen, (std::vector<double>{7, 5, 5, 3}));
  EXPECT_FALSE(sel.next().has_value());
}

TEST(TreeTopK, PowersOfTwoCube) {
  const std::vector<Vector> v{{0, -1}, {0, -2}, {0, -4}};
  const auto r = tree_top_k(v, 8);
  EXPECT_EQ(values_of(r), (std::vector<double>{0, -1, -2, -3, -4, -5, -6, -7}));
}

TEST(TreeTopK, TopOneCarriesTupleOfMaxima) {
  const std::vector<Vector> v{{0.5, 2.5, -1}, {7, 3}, {-2, -1.5, -8}, {4}};
  const auto r = tree_top_k(v, 1);
  ASSERT_EQ(r.items.size(), 1u);
  EXPECT_EQ(r.items[0].value, (2.5 + 7) + (-1.5 + 4));
  EXPECT_EQ(r.items[0].indices, (std::vector<Index>{1, 0, 1, 0}));
}

TEST(TreeTopK, ZeroKAndClamp) {
  const std::vector<Vector> v{{3, 1}, {4, 2, 0}};
  EXPECT_TRUE(tree_top_k(v, 0).items.empty());
  EXPECT_EQ(tree_top_k(v, 99).items.size(), 6u);
}

TEST(TreeTopK, DomainErrors) {
  EXPECT_THROW(tree_top_k({}, 1), DomainError);
  const std::vector<Vector> empty_vec{{1.0}, {}};
  EXPECT_THROW(tree_top_k(empty_vec, 1), DomainError);
  const std::vector<Vector> nan{{std::numeric_limits<double>::quiet_NaN()}, {1.0}};
  EXPECT_THROW(tree_top_k(nan, 1), DomainError);
}

TEST(TreeTopK, CountersOffLeavesResultsUnchanged) {
  std::mt19937_64 rng(9);
  const auto v = testing::random_instance(rng, 5, 5);
  const auto on = tree_top_k(v, 60);
  const auto off = tree_top_k(v, 60, SelectOptions{.instrument = false});
  EXPECT_EQ(values_of(on), values_of(off));
  EXPECT_EQ(off.counters.heap_pushes, 0u);
  EXPECT_EQ(off.counters.peak_fringe_entries, 0u);
}

TEST(TreeSelectorProperty, LazinessHoldsAfterEveryPop) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const auto v = testing::random_instance(rng, m, 5);
    TreeSelector sel(v);
    ASSERT_TRUE(lazy(sel));
    while (sel.next()) ASSERT_TRUE(lazy(sel)) << "trial " << trial;
  }
}

TEST(TreeSelectorProperty, MatchesOracleAndTensor) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const auto v = testing::random_instance(rng, m, 5);
    const std::size_t total = cartesian_size(v);
    const auto expected = brute_force_top_k(v, total);
    for (std::size_t k = 0; k <= total; k += std::max<std::size_t>(1, total / 7)) {
      TopKResult prefix;
      prefix.items.assign(expected.items.begin(), expected.items.begin() + static_cast<std::ptrdiff_t>(k));
      const auto tree = tree_top_k(v, k);
      ASSERT_TRUE(matches_oracle(v, prefix, tree)) << "trial " << trial << " k=" << k;
      ASSERT_TRUE(matches_oracle(v, tensor_top_k(v, k), tree)) << "trial " << trial << " k=" << k;
      const auto& c = tree.counters;
      ASSERT_LE(c.heap_pops, c.heap_pushes);
      ASSERT_LE(c.peak_fringe_entries, 2 * c.heap_pops + m);
      if (k > 0) ASSERT_GE(c.peak_fringe_entries, 1u);
    }
  }
}

TEST(TreeSelectorProperty, EmissionIsNonIncreasingWithUniqueTuples) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = testing::random_instance(rng, 1 + trial % 6, 4);
    TreeSelector sel(v);
    std::set<std::vector<Index>> seen;
    double last = std::numeric_limits<double>::infinity();
    while (auto item = sel.next()) {
      ASSERT_LE(item->value, last + 1e-9 * std::max(1.0, std::abs(last)));
      last = item->value;
      ASSERT_TRUE(seen.insert(item->indices).second);
    }
    ASSERT_EQ(seen.size(), cartesian_size(v));
  }
}

}  // namespace
}  // namespace cartsum
