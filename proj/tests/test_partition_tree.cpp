#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "signcert/partition_tree.hpp"

using signcert::PartitionTree;
using Partition = PartitionTree<int>::Partition;

TEST(PartitionTree, Examples) {
  auto t4 = PartitionTree<int>::build({1, 2, 3, 4});
  ASSERT_EQ(t4.height(), 3);
  EXPECT_EQ(t4.level(1), (Partition{{1}, {2}, {3}, {4}}));
  EXPECT_EQ(t4.level(2), (Partition{{1, 2}, {3, 4}}));
  EXPECT_EQ(t4.level(3), (Partition{{1, 2, 3, 4}}));

  auto t3 = PartitionTree<int>::build({1, 2, 3});
  ASSERT_EQ(t3.height(), 3);
  EXPECT_EQ(t3.level(2), (Partition{{1, 2}, {3}}));
  EXPECT_EQ(t3.level(3), (Partition{{1, 2, 3}}));

  auto t1 = PartitionTree<int>::build({1});
  EXPECT_EQ(t1.height(), 1);
  EXPECT_EQ(t1.level(1), (Partition{{1}}));
}

TEST(PartitionTree, Errors) {
  EXPECT_THROW(PartitionTree<int>::build({}), std::invalid_argument);
  auto t = PartitionTree<int>::build({1, 2});
  EXPECT_THROW(t.level(0), std::out_of_range);
  EXPECT_THROW(t.level(3), std::out_of_range);
}

TEST(PartitionTree, LaminarPartitionsWithSizeBounds) {
  for (int size = 1; size <= 40; ++size) {
    std::vector<int> base(size);
    std::iota(base.begin(), base.end(), 1);
    std::reverse(base.begin(), base.end());
    auto t = PartitionTree<int>::build(base);
    const int expected = size == 1 ? 1 : static_cast<int>(std::ceil(std::log2(size))) + 1;
    ASSERT_EQ(t.height(), expected) << size;
    for (int i = 1; i <= t.height(); ++i) {
      std::vector<int> seen;
      for (const auto& node : t.level(i)) {
        EXPECT_FALSE(node.empty());
        EXPECT_LE(node.size(), std::size_t{1} << (i - 1));
        seen.insert(seen.end(), node.begin(), node.end());
      }
      std::vector<int> sorted_seen = seen, sorted_base = base;
      std::sort(sorted_seen.begin(), sorted_seen.end());
      std::sort(sorted_base.begin(), sorted_base.end());
      EXPECT_EQ(sorted_seen, sorted_base);
      if (i == 1) continue;
      // Each lower node sits inside exactly one node of this level.
      for (const auto& low : t.level(i - 1)) {
        const std::set<int> lo(low.begin(), low.end());
        int parents = 0;
        for (const auto& node : t.level(i)) {
          const std::set<int> up(node.begin(), node.end());
          parents += std::includes(up.begin(), up.end(), lo.begin(), lo.end());
        }
        EXPECT_EQ(parents, 1);
      }
    }
    EXPECT_EQ(t.level(t.height()).size(), 1u);
  }
}
