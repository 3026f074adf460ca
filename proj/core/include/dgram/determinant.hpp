#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "dgram/matrix.hpp"
#include "dgram/poly.hpp"
#include "dgram/reduction.hpp"

namespace dgram {

// Fraction-free elimination with row pivoting.
mpz_class det_bareiss(Matrix<mpz_class> M);
mpq_class det_rational(Matrix<mpq_class> M);

// Degree bound used for interpolation: min of the row-max and column-max
// degree sums; -1 when some row or column is identically zero.
long det_degree_bound(const Matrix<Poly>& M);

// Exact determinant by evaluation at 0..B and Newton interpolation.
Poly det_direct(const Matrix<Poly>& M);

struct DetFactor {
    Poly factor;
    std::size_t multiplicity = 1;
    std::string origin;  // block label the factor came from
};

struct DetResult {
    Poly poly;
    std::vector<DetFactor> factors;  // product (with multiplicities) == poly

    Poly expand() const;
};

// Splits p into the structured factors x^2-x-2c (c = 1..max_c) and x-c
// (c = 0..max_c), plus a residual when anything is left. Constant factors
// other than 1 are kept as a residual too.
std::vector<DetFactor> factor_structured(const Poly& p, std::size_t max_c, const std::string& origin);

// Product of block determinants, each block split into the connected
// components of its nonzero pattern.
DetResult det_blocks(const BlockDecomposition& decomp);

}  // namespace dgram
