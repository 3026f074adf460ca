#include <gtest/gtest.h>

#include "dgram/poly.hpp"

using namespace dgram;

TEST(Poly, ArithmeticAndFormatting) {
    Poly x = Poly::x();
    Poly p = x * x - x - Poly(2L);
    EXPECT_EQ(p.str(), "x^2-x-2");
    EXPECT_EQ((p * p).str(), "x^4-2*x^3-3*x^2+4*x+4");
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_EQ((mpq_class(3, 2) * x).str(), "3/2*x");
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_TRUE(p.is_monic());
    EXPECT_TRUE(p.is_integral());
}

TEST(Poly, DivisionAndEvaluation) {
    Poly x = Poly::x();
    Poly a = (x - Poly(2L)) * (x + Poly(1L)) * (x - Poly(5L));
    Poly q, r;
    a.divmod(x - Poly(5L), q, r);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, x * x - x - Poly(2L));
    EXPECT_EQ(a.eval(2), 0);
    EXPECT_EQ(a.eval_integral(3), mpz_class(-8));
}

TEST(Poly, StringRoundTrip) {
    Poly p(std::vector<mpq_class>{mpq_class(-1, 3), 0, 4});
    EXPECT_EQ(Poly::from_strings(p.to_strings()), p);
    EXPECT_EQ(p.to_strings(), (std::vector<std::string>{"-1/3", "0", "4"}));
}

TEST(Poly, ClosedForms) {
    Poly x = Poly::x();
    EXPECT_EQ(phi_z2(1, 0, 1, 0), x * x - x - Poly(2L));
    EXPECT_EQ(phi_z2(0, 0, 0, 1), x);
    EXPECT_EQ(phi_z2(0, 0, 0, 0), Poly(1L));
    EXPECT_TRUE(phi_z2(0, 0, -1, 0).is_zero());
    EXPECT_EQ(phi_partition(0, 3), x * (x - Poly(1L)) * (x - Poly(2L)));
    EXPECT_EQ(phi_z2(0, 1, 1, 2), (x * x - x) * (x - Poly(1L)) * (x - Poly(2L)));
}
