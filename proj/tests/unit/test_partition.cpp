#include <gtest/gtest.h>

#include "dgram/partition.hpp"

using namespace dgram;

TEST(SetPartition, BellNumbers) {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(all_partitions(n).size(), bell[n]) << n;
}

TEST(SetPartition, CanonicalLabels) {
    auto a = SetPartition::from_labels({7, 3, 7, 3, 9});
    auto b = SetPartition::from_blocks(5, {{1, 3}, {0, 2}, {4}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.labels(), (std::vector<std::uint32_t>{0, 1, 0, 1, 2}));
    EXPECT_EQ(a.num_blocks(), 3u);
}

TEST(SetPartition, ParseRoundTrip) {
    for (const auto& p : all_partitions(5)) EXPECT_EQ(SetPartition::parse(p.str()), p);
    EXPECT_EQ(SetPartition::parse("{0,3|1,2}"), SetPartition::from_pairs(4, {{0, 3}, {1, 2}}));
}

TEST(SetPartition, JoinAndRefinement) {
    auto a = SetPartition::from_pairs(5, {{0, 1}});
    auto b = SetPartition::from_pairs(5, {{1, 2}, {3, 4}});
    auto j = join(a, b);
    EXPECT_EQ(j, SetPartition::from_blocks(5, {{0, 1, 2}, {3, 4}}));
    EXPECT_TRUE(is_coarser(j, a));
    EXPECT_TRUE(is_coarser(j, b));
    EXPECT_FALSE(is_coarser(a, j));
    EXPECT_TRUE(is_coarser(a, a));
}

TEST(UnionFind, Components) {
    UnionFind uf(6);
    uf.unite(0, 5);
    uf.unite(5, 2);
    EXPECT_EQ(uf.find(0), uf.find(2));
    EXPECT_NE(uf.find(0), uf.find(1));
    EXPECT_EQ(SetPartition::from_union_find(uf).num_blocks(), 4u);
}
