#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgram/gram.hpp"

namespace dgram {

// leq(u, v): diagram u is coarser than diagram v (indices into J).
struct CoarseningPoset {
    std::size_t n = 0;
    Matrix<std::uint8_t> leq;

    bool operator()(std::size_t u, std::size_t v) const { return leq(u, v) != 0; }
};

CoarseningPoset coarsening_poset(const JSet& J);

struct JoinResult {
    RowConfig row;
    std::vector<BlockKind> kinds;
    std::optional<std::size_t> index;  // position in J when the join lies in J
};

// Smallest common coarsening of d_u and d_v in the ambient family of symmetric
// diagrams, or nullopt when d_u . d_v loses through classes.
std::optional<JoinResult> join_in_J(const JSet& J, std::size_t u, std::size_t v);

enum class ReductionMethod {
    Mobius,      // T = inverse of the zeta matrix, applied as T^t G T
    Sequential,  // literal column then row subtractions in key order
};

struct ReducedBlock {
    std::string label;  // "r1=1,r2=0", "r=2", or "rho"
    bool rho = false;
    std::vector<std::size_t> indices;
    Matrix<Poly> reduced;
    Matrix<Poly> predicted;
};

struct EntryDiff {
    std::string block;
    std::size_t row = 0, col = 0;  // indices into J
    Poly got, predicted;
    bool informative = false;  // closed form is only advisory here
};

struct BlockDecomposition {
    Algebra algebra = Algebra::Z2;
    std::size_t k = 0, s1 = 0, s2 = 0;
    Matrix<mpz_class> transform;
    Matrix<Poly> reduced;
    std::vector<ReducedBlock> blocks;
    std::vector<EntryDiff> diffs;
    std::vector<std::pair<std::size_t, std::size_t>> off_block_nonzero;

    // Diffs that are not marked informative.
    std::size_t hard_diffs() const;
};

bool in_rho_block(const JSet& J, std::size_t u);

// Closed-form prediction for entry (u, v) of the reduced matrix; `informative`
// is set where the closed form is advisory (off-diagonal rho entries).
Poly predicted_entry(const JSet& J, std::size_t u, std::size_t v, bool* informative = nullptr);
// Blocks with their index sets and predicted submatrices (reduced left empty).
std::vector<ReducedBlock> predicted_blocks(const JSet& J);

Matrix<mpz_class> transform_matrix(const CoarseningPoset& P, ReductionMethod method = ReductionMethod::Mobius);

BlockDecomposition reduce(const GramMatrix& G, const JSet& J, const CoarseningPoset& P,
                          ReductionMethod method = ReductionMethod::Mobius);
// Recomputes diffs and off-block nonzeros of an existing decomposition.
void compare(BlockDecomposition& decomp);

// FNV-1a over the transform entries, as 16 hex digits.
std::string transform_checksum(const Matrix<mpz_class>& T);

}  // namespace dgram
