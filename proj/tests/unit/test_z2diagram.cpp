#include <gtest/gtest.h>

#include "dgram/error.hpp"
#include "dgram/z2diagram.hpp"

using namespace dgram;

namespace {
std::vector<Z2Diagram> all_z2(std::size_t k) {
    std::vector<Z2Diagram> out;
    for (const auto& p : all_partitions(4 * k))
        if (is_swap_stable(p)) out.emplace_back(k, p);
    return out;
}
}  // namespace

TEST(Z2Diagram, StableRowsMatchFilter) {
    for (std::size_t k = 1; k <= 3; ++k) {
        std::size_t count = 0;
        for (const auto& p : all_partitions(2 * k)) count += is_swap_stable(p);
        EXPECT_EQ(z2_stable_rows(k).size(), count) << k;
    }
}

TEST(Z2Diagram, RejectsUnstable) {
    auto p = SetPartition::from_pairs(4, {{0, 2}});
    EXPECT_THROW(Z2Diagram(1, p), ValidationError);
}

TEST(Z2Diagram, ClosedAndAssociative) {
    auto all = all_z2(1);
    for (const auto& a : all)
        for (const auto& b : all) {
            auto ab = multiply(a, b);
            EXPECT_TRUE(is_swap_stable(ab.diagram.partition()));
            for (const auto& c : all) {
                auto bc = multiply(b, c);
                auto l = multiply(ab.diagram, c), r = multiply(a, bc.diagram);
                ASSERT_EQ(l.diagram, r.diagram);
                ASSERT_EQ(ab.loops + l.loops, bc.loops + r.loops);
            }
        }
}

TEST(Z2Diagram, ParseRoundTrip) {
    for (const auto& d : all_z2(1)) EXPECT_EQ(Z2Diagram::parse(1, d.str()), d);
    auto id = Z2Diagram::identity(2);
    EXPECT_EQ(id.stats().s1, 2u);
    EXPECT_EQ(id.stats().s2, 0u);
}

TEST(Z2Diagram, BlockKinds) {
    // {1e,1g} is fixed by the swap; {1e,1'e} pairs with {1g,1'g}
    auto fixed = Z2Diagram::parse(1, "[{1e,1g}|{1′e,1′g}]");
    auto st = fixed.stats();
    EXPECT_EQ(st.r2, 1u);
    EXPECT_EQ(st.r2p, 1u);
    EXPECT_EQ(st.s1 + st.s2, 0u);
    auto paired = Z2Diagram::identity(1);
    EXPECT_EQ(paired.stats().s1, 1u);
}

TEST(Z2Diagram, SignedWindow) {
    Z2Stats st;
    st.s1 = 3;
    EXPECT_TRUE(signed_window(3, st));
    st.s1 = 2;
    st.s2 = 1;
    EXPECT_FALSE(signed_window(3, st));
    st.s1 = 1;
    st.s2 = 1;
    EXPECT_TRUE(signed_window(3, st));
}
