#include <gtest/gtest.h>

#include "dgram/gram.hpp"
#include "dgram/stirling.hpp"

using namespace dgram;

TEST(Stirling, Classical) {
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling2(5, 3), 25);
    EXPECT_EQ(stirling2(3, 0), 0);
    EXPECT_EQ(binomial(6, 2), 15);
}

TEST(Stirling, PartitionCounts) {
    EXPECT_EQ(b_partition(2, 2, 1), 5);
    EXPECT_EQ(b_partition(0, 3, 3), 1);
    EXPECT_EQ(b_partition(0, 3, 1), 1);
    EXPECT_EQ(b_partition(1, 3, 1), 7);
    // one-higher horizontal count is unreachable
    EXPECT_EQ(b_partition(1, 2, 3), 0);
}

TEST(Stirling, Z2Window) {
    EXPECT_EQ(b_z2({0, 0, 1, 0, 2, 0}), 0);
    EXPECT_EQ(b_z2({0, 0, 0, 1, 0, 1}), 1);
    EXPECT_EQ(b_z2({0, 0, 0, 0, 0, 0}), 1);
    // printed grid cell that is off by one: row (1,2), column (1,1) at s = 0
    EXPECT_EQ(b_z2({0, 0, 1, 2, 1, 1}), 1);
}

TEST(Stirling, MatchesExhaustiveOnStandardDiagrams) {
    PartitionTuple alpha{{{1}, {}, {1}, {1, 1}}};
    auto d = standard_diagram(alpha, 4);
    for (std::size_t p1 = 0; p1 <= 1; ++p1)
        for (std::size_t p2 = 0; p1 + p2 <= 3; ++p2)
            EXPECT_EQ(count_coarser_bruteforce(d, p1, p2), b_z2({1, 0, 1, 2, p1, p2})) << p1 << "," << p2;
    PartitionTuple beta{{{1}, {1, 1, 1}}};
    auto pd = standard_partition_diagram(beta, 4);
    for (std::size_t p = 0; p <= 3; ++p) EXPECT_EQ(count_coarser_bruteforce(pd, p), b_partition(1, 3, p)) << p;
}
