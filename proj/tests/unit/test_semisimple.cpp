#include <gtest/gtest.h>

#include "dgram/error.hpp"
#include "dgram/semisimple.hpp"

using namespace dgram;

TEST(Semisimple, ParameterParsing) {
    EXPECT_FALSE(parse_parameter("x").has_value());
    EXPECT_EQ(*parse_parameter("3"), 3);
    EXPECT_EQ(*parse_parameter("-2/4"), mpq_class(-1, 2));
    EXPECT_THROW(parse_parameter("0.5"), ValidationError);
    EXPECT_THROW(parse_parameter("1e3"), ValidationError);
    EXPECT_THROW(parse_parameter("abc"), ValidationError);
    EXPECT_THROW(parse_parameter("1/0"), ValidationError);
}

TEST(Semisimple, GenericParameter) {
    for (auto alg : {Algebra::Partition, Algebra::Z2, Algebra::Signed}) {
        auto v = verdict(alg, 2, std::nullopt);
        EXPECT_TRUE(v.semisimple);
        EXPECT_FALSE(v.caveat.empty());
    }
}

TEST(Semisimple, RootsAreWitnessed) {
    auto f = global_poly(Algebra::Partition, 3);
    for (long q = 0; q <= 2; ++q) {
        auto v = verdict(f, mpq_class(q));
        EXPECT_FALSE(v.semisimple) << q;
        EXPECT_FALSE(v.witnesses.empty());
        EXPECT_EQ(v.semisimple, semisimple_by_evaluation(f, mpq_class(q)));
    }
    EXPECT_TRUE(verdict(f, mpq_class(1, 2)).semisimple);
}

TEST(Semisimple, GuardStopsLargeRuns) {
    EXPECT_THROW(global_poly(Algebra::Z2, 5, 50), GuardExceeded);
    try {
        global_poly(Algebra::Z2, 4, 10);
        FAIL();
    } catch (const GuardExceeded& e) {
        EXPECT_GT(e.projected(), 10u);
    }
}
