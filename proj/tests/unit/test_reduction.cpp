#include <gtest/gtest.h>

#include "dgram/reduction.hpp"

using namespace dgram;

TEST(Reduction, MethodsAgree) {
    for (auto alg : {Algebra::Partition, Algebra::Z2, Algebra::Signed})
        for (std::size_t k = 1; k <= 3; ++k)
            for (auto [s1, s2] : admissible_pairs(alg, k)) {
                auto J = enumerate_J(alg, k, s1, s2);
                auto G = build_gram(J);
                auto P = coarsening_poset(J);
                auto a = reduce(G, J, P, ReductionMethod::Mobius);
                auto b = reduce(G, J, P, ReductionMethod::Sequential);
                EXPECT_EQ(a.transform, b.transform);
                EXPECT_EQ(a.reduced, b.reduced);
                EXPECT_EQ(a.hard_diffs(), 0u);
                EXPECT_TRUE(a.off_block_nonzero.empty());
            }
}

TEST(Reduction, TransformIsUnitriangular) {
    auto J = enumerate_J(Algebra::Z2, 3, 0, 1);
    auto T = transform_matrix(coarsening_poset(J));
    for (std::size_t i = 0; i < T.rows(); ++i) {
        EXPECT_EQ(T(i, i), 1);
        for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(T(i, j), 0);
    }
    auto cs = transform_checksum(T);
    EXPECT_EQ(cs.size(), 16u);
    EXPECT_EQ(cs, transform_checksum(transform_matrix(coarsening_poset(J), ReductionMethod::Sequential)));
}

TEST(Reduction, PartitionBlocksAreClosedForms) {
    auto J = enumerate_J(Algebra::Partition, 4, 1, 0);
    auto D = reduce(build_gram(J), J, coarsening_poset(J));
    for (const auto& b : D.blocks) {
        ASSERT_FALSE(b.rho);
        for (std::size_t a = 0; a < b.indices.size(); ++a)
            EXPECT_EQ(b.reduced(a, a), phi_partition(1, static_cast<long>(J.elems[b.indices[a]].key.r2)));
    }
}

TEST(Reduction, JoinRequiresPropagation) {
    auto J = enumerate_J(Algebra::Z2, 2, 1, 0);
    for (std::size_t u = 0; u < J.size(); ++u) {
        auto j = join_in_J(J, u, u);
        ASSERT_TRUE(j.has_value());
        EXPECT_EQ(j->index, u);
    }
}

TEST(Reduction, RejectsMismatchedGram) {
    auto J = enumerate_J(Algebra::Z2, 2, 1, 0);
    auto other = build_gram(Algebra::Z2, 2, 0, 0);
    EXPECT_ANY_THROW(reduce(other, J, coarsening_poset(J)));
}
