#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dgram/diagram.hpp"
#include "dgram/partition.hpp"

namespace dgram {

// EPair: block moved by the e<->g swap (its conjugate is another block).
// Z2: block fixed by the swap.
enum class BlockKind : std::uint8_t { EPair, Z2 };

struct Z2Stats {
    std::size_t s1 = 0, s2 = 0;    // through classes: e-pairs (once per pair), Z2
    std::size_t r1 = 0, r2 = 0;    // top-row horizontal edges: e-pairs, Z2
    std::size_t r1p = 0, r2p = 0;  // bottom-row analogues
    friend bool operator==(const Z2Stats&, const Z2Stats&) = default;
};

// Vertex (i, e) of the top row is 2(i-1), (i, g) is 2(i-1)+1; the bottom row
// is offset by 2k. The e<->g swap is therefore v ^ 1 on every vertex.
inline std::size_t swap_vertex(std::size_t v) { return v ^ 1u; }

// Z2-stable diagram on (k + k') x Z2, i.e. a 2k-partition diagram invariant
// under the swap. Stability is checked on construction.
class Z2Diagram {
public:
    Z2Diagram() = default;
    Z2Diagram(std::size_t k, SetPartition part);

    static Z2Diagram identity(std::size_t k);
    static Z2Diagram parse(std::size_t k, const std::string& text);

    std::size_t k() const { return k_; }
    const SetPartition& partition() const { return part_; }
    PartitionDiagram embed() const { return PartitionDiagram(2 * k_, part_); }

    BlockKind classify_block(std::size_t block_index) const;
    // Throws ValidationError when `block` is not a block of this diagram.
    BlockKind classify_block(const std::vector<std::uint32_t>& block) const;

    Z2Stats stats() const;
    PartitionDiagram project() const;
    std::pair<SetPartition, SetPartition> halves() const;

    // Tokens like "1e,1g,2′e" per block.
    std::string str() const;
    std::vector<std::vector<std::string>> token_blocks() const;

    friend bool operator==(const Z2Diagram&, const Z2Diagram&) = default;

private:
    std::size_t k_ = 0;
    SetPartition part_;
};

struct Z2Product {
    Z2Diagram diagram;
    std::size_t loops = 0;
};

Z2Product multiply(const Z2Diagram& d1, const Z2Diagram& d2);

bool is_swap_stable(const SetPartition& part);
bool is_signed_member(const Z2Diagram& d);
// Same window, phrased on the statistics of a diagram.
bool signed_window(std::size_t k, const Z2Stats& st);

// Kinds of the blocks of a single row (2k vertices, swap = v ^ 1).
std::vector<BlockKind> row_kinds(const SetPartition& row);
// Every swap-stable partition of a row with k columns.
std::vector<SetPartition> z2_stable_rows(std::size_t k);

// Counts on a row configuration: e-pair counts are per conjugate pair.
struct RowCounts {
    std::size_t s1 = 0, s2 = 0, r1 = 0, r2 = 0;
};
RowCounts row_counts(const RowConfig& row, const std::vector<BlockKind>& kinds);

// Every marked row of the ambient Z2 family with s1 through e-pairs and s2
// through Z2 blocks, in stable-row order. Mirroring gives the symmetric diagrams.
std::vector<RowConfig> z2_row_configs(std::size_t k, std::size_t s1, std::size_t s2);

// Type-respecting coarsening of row configurations: true iff u is coarser
// than v. Through blocks of v must sit in distinct through blocks of u of the
// same kind; e-horizontal blocks of v may sit anywhere; Z2-horizontal blocks
// of v only inside Z2 blocks. The partition algebra is the case where every
// block has kind Z2.
bool is_coarser_config(const RowConfig& u, const std::vector<BlockKind>& ku,
                       const RowConfig& v, const std::vector<BlockKind>& kv);

}  // namespace dgram
