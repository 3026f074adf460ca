#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgram/partition.hpp"

namespace dgram {

// Result of stacking two diagrams on a shared middle row.
struct StackResult {
    SetPartition part;        // top of upper + bottom of lower, 2n vertices
    std::size_t loops = 0;    // components living only in the middle row
    std::size_t propagating = 0;
};

// upper and lower are partitions of 2n vertices: top row 0..n-1, bottom n..2n-1.
StackResult stack(const SetPartition& upper, const SetPartition& lower, std::size_t n);

std::size_t propagating_number(const SetPartition& part, std::size_t n);

// Partition diagram on k top vertices (index i-1) and k bottom vertices (k+i-1).
class PartitionDiagram {
public:
    PartitionDiagram() = default;
    PartitionDiagram(std::size_t k, SetPartition part);

    static PartitionDiagram identity(std::size_t k);
    // Text form "[{1,2′}|{2}|{1′}]".
    static PartitionDiagram parse(std::size_t k, const std::string& text);

    std::size_t k() const { return k_; }
    const SetPartition& partition() const { return part_; }
    std::size_t propagating_number() const;
    std::string str() const;
    // Blocks as signed 1-based indices: +i top, -i bottom.
    std::vector<std::vector<int>> signed_blocks() const;

    friend bool operator==(const PartitionDiagram&, const PartitionDiagram&) = default;

private:
    std::size_t k_ = 0;
    SetPartition part_;
};

struct DiagramProduct {
    PartitionDiagram diagram;
    std::size_t loops = 0;
};

DiagramProduct multiply(const PartitionDiagram& d1, const PartitionDiagram& d2);

// One row of a symmetric diagram together with the blocks that pass through.
// Mirroring the row onto the bottom and joining each through block with its
// own copy recovers the diagram.
struct RowConfig {
    SetPartition part;
    std::vector<bool> through;  // indexed by canonical block

    std::size_t through_count() const;
    friend bool operator==(const RowConfig&, const RowConfig&) = default;
};

SetPartition mirror(const RowConfig& row);
bool is_symmetric(const SetPartition& part, std::size_t n);
// Throws ValidationError if part is not top/bottom symmetric.
RowConfig row_config(const SetPartition& part, std::size_t n);

// Every partition of k vertices with exactly s blocks marked as through.
std::vector<RowConfig> partition_row_configs(std::size_t k, std::size_t s);

// Calls f(mask) for every subset of {0..n-1} of size m, as a bitmask.
template <class F>
void for_each_subset(std::size_t n, std::size_t m, F&& f) {
    if (m > n) return;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) == m) f(mask);
}

}  // namespace dgram
