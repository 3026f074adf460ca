#include <gtest/gtest.h>

#include "dgram/determinant.hpp"

using namespace dgram;

TEST(Determinant, BareissMatchesRational) {
    Matrix<mpz_class> a(3, 3);
    long vals[3][3] = {{2, -1, 0}, {4, 3, 7}, {0, 5, -2}};
    Matrix<mpq_class> q(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a(i, j) = vals[i][j];
            q(i, j) = vals[i][j];
        }
    EXPECT_EQ(det_bareiss(a), -90);
    EXPECT_EQ(det_rational(q), -90);
    Matrix<mpz_class> swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    EXPECT_EQ(det_bareiss(swap), -1);
}

TEST(Determinant, PolynomialMatrix) {
    Poly x = Poly::x();
    Matrix<Poly> m(2, 2);
    m(0, 0) = x * x;
    m(0, 1) = x;
    m(1, 0) = x;
    m(1, 1) = x * x;
    EXPECT_EQ(det_direct(m), x.pow(4) - x * x);
    m(1, 1) = Poly();
    m(1, 0) = Poly();
    EXPECT_TRUE(det_direct(m).is_zero());
}

TEST(Determinant, StructuredFactors) {
    Poly x = Poly::x();
    Poly p = (x * x - x - Poly(2L)).pow(2) * (x - Poly(1L)) * x;
    auto fs = factor_structured(p, 4, "b");
    Poly back(1L);
    for (const auto& f : fs) back *= f.factor.pow(f.multiplicity);
    EXPECT_EQ(back, p);
    ASSERT_FALSE(fs.empty());
    EXPECT_EQ(fs.front().factor, x * x - x - Poly(2L));
    EXPECT_EQ(fs.front().multiplicity, 2u);
}

TEST(Determinant, BlocksMatchDirect) {
    auto J = enumerate_J(Algebra::Signed, 3, 1, 0);
    auto G = build_gram(J);
    auto D = reduce(G, J, coarsening_poset(J));
    auto r = det_blocks(D);
    EXPECT_EQ(r.poly, det_direct(G.entries));
    EXPECT_EQ(r.expand(), r.poly);
    EXPECT_TRUE(r.poly.is_monic());
}
