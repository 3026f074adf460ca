#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dgram/determinant.hpp"
#include "dgram/gram.hpp"

namespace dgram {

inline constexpr std::size_t kDefaultGuard = 2000;

struct PairDet {
    std::size_t s1 = 0, s2 = 0;
    std::size_t dim = 0;
    DetResult det;
};

struct GlobalPoly {
    Algebra algebra = Algebra::Z2;
    std::size_t k = 0;
    std::vector<PairDet> parts;  // one per admissible (s1, s2)
    Poly poly;                   // product of the part determinants
};

// Throws GuardExceeded when the Gram matrices of all cells together would
// exceed `guard` rows.
GlobalPoly global_poly(Algebra alg, std::size_t k, std::size_t guard = kDefaultGuard);

struct Witness {
    std::size_t s1 = 0, s2 = 0;
    Poly factor;
    std::string block;
    std::string description;
};

struct Verdict {
    Algebra algebra = Algebra::Z2;
    std::size_t k = 0;
    std::optional<mpq_class> q;  // nullopt: generic parameter x
    bool semisimple = true;
    std::vector<Witness> witnesses;
    std::string caveat;
};

// Factor scan: evaluates every retained factor at q.
Verdict verdict(const GlobalPoly& f, const std::optional<mpq_class>& q);
Verdict verdict(Algebra alg, std::size_t k, const std::optional<mpq_class>& q, std::size_t guard = kDefaultGuard);
// Full path: evaluates the expanded product at q.
bool semisimple_by_evaluation(const GlobalPoly& f, const std::optional<mpq_class>& q);

// "x" for the generic parameter, otherwise an integer or "p/q". Decimal points
// and exponents are rejected.
std::optional<mpq_class> parse_parameter(const std::string& text);

}  // namespace dgram
