#include <gtest/gtest.h>

#include "dgram/diagram.hpp"
#include "dgram/error.hpp"

using namespace dgram;

TEST(PartitionDiagram, IdentityIsNeutral) {
    for (const auto& p : all_partitions(4)) {
        PartitionDiagram d(2, p);
        auto id = PartitionDiagram::identity(2);
        EXPECT_EQ(multiply(id, d).diagram, d);
        EXPECT_EQ(multiply(d, id).diagram, d);
        EXPECT_EQ(multiply(d, id).loops, 0u);
    }
}

TEST(PartitionDiagram, AssociativeWithLoops) {
    auto all = all_partitions(4);
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) {
                PartitionDiagram x(2, a), y(2, b), z(2, c);
                auto xy = multiply(x, y), yz = multiply(y, z);
                auto left = multiply(xy.diagram, z), right = multiply(x, yz.diagram);
                ASSERT_EQ(left.diagram, right.diagram);
                ASSERT_EQ(xy.loops + left.loops, yz.loops + right.loops);
            }
}

TEST(PartitionDiagram, ContractionSquaresToLoop) {
    auto e = PartitionDiagram::parse(2, "[{1,2}|{1′,2′}]");
    auto sq = multiply(e, e);
    EXPECT_EQ(sq.diagram, e);
    EXPECT_EQ(sq.loops, 1u);
    EXPECT_EQ(e.propagating_number(), 0u);
}

TEST(PartitionDiagram, ParseRoundTrip) {
    for (const auto& p : all_partitions(6)) {
        PartitionDiagram d(3, p);
        EXPECT_EQ(PartitionDiagram::parse(3, d.str()), d);
    }
    EXPECT_THROW(PartitionDiagram::parse(2, "[{1,3}]"), ValidationError);
}

TEST(RowConfig, MirrorIsSymmetric) {
    for (std::size_t s = 0; s <= 3; ++s)
        for (const auto& row : partition_row_configs(3, s)) {
            auto d = mirror(row);
            EXPECT_TRUE(is_symmetric(d, 3));
            EXPECT_EQ(propagating_number(d, 3), s);
            EXPECT_EQ(row_config(d, 3), row);
        }
}

TEST(RowConfig, CountsMatchMarkedPartitions) {
    // partitions of 3 points with s marked blocks: sum over blocks C(b, s)
    EXPECT_EQ(partition_row_configs(3, 0).size(), 5u);
    EXPECT_EQ(partition_row_configs(3, 1).size(), 10u);
    EXPECT_EQ(partition_row_configs(3, 2).size(), 6u);
    EXPECT_EQ(partition_row_configs(3, 3).size(), 1u);
}
