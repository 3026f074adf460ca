#include <gtest/gtest.h>

#include <fstream>

#include "dgram/error.hpp"
#include "dgram/gram.hpp"
#include "json.hpp"

using namespace dgram;

TEST(Gram, ParseAlgebra) {
    EXPECT_EQ(parse_algebra("signed"), Algebra::Signed);
    EXPECT_EQ(to_string(Algebra::Partition), "partition");
    EXPECT_THROW(parse_algebra("brauer"), ValidationError);
}

TEST(Gram, Windows) {
    EXPECT_NO_THROW(check_window(Algebra::Signed, 3, 1, 0));
    EXPECT_THROW(check_window(Algebra::Z2, 2, 2, 1), ValidationError);
    EXPECT_THROW(check_window(Algebra::Partition, 3, 1, 1), ValidationError);
    EXPECT_THROW(check_window(Algebra::Partition, 3, 4, 0), ValidationError);
    EXPECT_TRUE(in_window(Algebra::Signed, 3, 3, 0));
    EXPECT_FALSE(in_window(Algebra::Signed, 3, 2, 1));
    EXPECT_EQ(admissible_pairs(Algebra::Partition, 3).size(), 4u);
}

TEST(Gram, SizesMatchFrozenCounts) {
    std::ifstream in(std::string(DGRAM_FIXTURE_DIR) + "/j_sizes.json");
    ASSERT_TRUE(in);
    auto fx = nlohmann::json::parse(in);
    for (const auto& row : fx["sizes"]) {
        Algebra alg = parse_algebra(row["algebra"]);
        std::size_t k = row["k"], s1 = row["s1"], s2 = row["s2"], n = row["size"];
        EXPECT_EQ(enumerate_J(alg, k, s1, s2).size(), n) << row.dump();
        EXPECT_EQ(count_J(alg, k, s1, s2), n) << row.dump();
    }
}

TEST(Gram, KeysAreSorted) {
    auto J = enumerate_J(Algebra::Signed, 3, 1, 0);
    ASSERT_EQ(J.size(), 34u);
    for (std::size_t u = 1; u < J.size(); ++u) EXPECT_LE(J.elems[u - 1].key.edges(), J.elems[u].key.edges());
    EXPECT_EQ(J.elems.front().key.alpha.str(), "(3,∅,∅,∅)");
    EXPECT_EQ(J.elems.back().key.alpha.str(), "(1,∅,1^2,∅)");
}

TEST(Gram, EntriesAreLoopPowers) {
    auto G = build_gram(Algebra::Z2, 2, 0, 0);
    for (std::size_t u = 0; u < G.size(); ++u) {
        EXPECT_EQ(G.entries(u, u), Poly::monomial(G.keys[u].edges()));
        for (std::size_t v = 0; v < G.size(); ++v) {
            if (G.exponent(u, v) < 0) EXPECT_TRUE(G.entries(u, v).is_zero());
            else EXPECT_EQ(G.entries(u, v), Poly::monomial(G.exponent(u, v)));
        }
    }
}

TEST(Gram, ThreadCountDoesNotChangeResult) {
    auto a = build_gram(Algebra::Signed, 3, 0, 0);
    setenv("DIAGRAM_GRAM_THREADS", "1", 1);
    auto b = build_gram(Algebra::Signed, 3, 0, 0);
    unsetenv("DIAGRAM_GRAM_THREADS");
    EXPECT_EQ(a.entries, b.entries);
    EXPECT_EQ(a.diagrams, b.diagrams);
}

TEST(Gram, StandardDiagramRealizesTuple) {
    PartitionTuple alpha{{{2}, {}, {1}, {1}}};
    auto d = standard_diagram(alpha, 4);
    EXPECT_EQ(underlying_partition(d), alpha);
}
