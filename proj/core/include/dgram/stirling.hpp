#pragma once

#include <gmpxx.h>

#include <cstddef>

#include "dgram/diagram.hpp"
#include "dgram/z2diagram.hpp"

namespace dgram {

// Classical Stirling numbers of the second kind and binomials, memoized.
mpz_class stirling2(std::size_t n, std::size_t k);
mpz_class binomial(std::size_t n, std::size_t k);

struct StirlingParams {
    std::size_t s1 = 0, s2 = 0;
    std::size_t r1 = 0, r2 = 0;  // horizontal edges of the finer diagram
    std::size_t p1 = 0, p2 = 0;  // horizontal edges of the coarser diagrams counted

    // p1 <= r1 and r1 - p1 >= p2 - r2.
    bool in_window() const { return p1 <= r1 && r1 + r2 >= p1 + p2; }
};

// Number of symmetric Z2 diagrams with the same through classes, p1 e-pair and
// p2 Z2 horizontal edges, lying above a diagram with r1, r2 horizontal edges.
// Zero outside the window.
mpz_class b_z2(const StirlingParams& p);
// Partition-algebra analogue: sum_{i=p}^{r} C(r,i) s^{r-i} S(i,p).
mpz_class b_partition(std::size_t s, std::size_t r, std::size_t p);

// Exhaustive counts over the ambient family of symmetric diagrams with the
// same through classes as d. d must be symmetric (top row mirrors bottom).
mpz_class count_coarser_bruteforce(const Z2Diagram& d, std::size_t p1, std::size_t p2);
mpz_class count_coarser_bruteforce(const PartitionDiagram& d, std::size_t p);

}  // namespace dgram
