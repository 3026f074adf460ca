#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dgram {

class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::size_t find(std::size_t x);
    void unite(std::size_t a, std::size_t b);
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

// Set partition of {0..n-1}. Stored as a restricted growth string: label[v]
// is the index of v's block when blocks are ordered by their minimum, so
// equal partitions have identical storage.
class SetPartition {
public:
    SetPartition() = default;
    explicit SetPartition(std::size_t n);  // all singletons

    static SetPartition from_pairs(std::size_t n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
    static SetPartition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
    // Any labelling (equal label = same block); canonicalized on entry.
    static SetPartition from_labels(const std::vector<std::uint32_t>& labels);
    static SetPartition from_union_find(UnionFind& uf);
    static SetPartition parse(std::string_view text);  // "{0,3,5|1,2|4}"

    std::size_t ground_size() const { return label_.size(); }
    std::size_t num_blocks() const { return nblocks_; }
    std::uint32_t block_of(std::size_t v) const { return label_[v]; }
    const std::vector<std::uint32_t>& labels() const { return label_; }
    std::vector<std::vector<std::uint32_t>> blocks() const;

    std::string str() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.label_ <=> b.label_; }

private:
    std::vector<std::uint32_t> label_;
    std::size_t nblocks_ = 0;
};

SetPartition join(const SetPartition& a, const SetPartition& b);
// True iff every block of b lies inside a block of a.
bool is_coarser(const SetPartition& a, const SetPartition& b);
// Every set partition of {0..n-1}, in restricted-growth-string order.
std::vector<SetPartition> all_partitions(std::size_t n);

struct SetPartitionHash {
    std::size_t operator()(const SetPartition& p) const;
};

}  // namespace dgram
