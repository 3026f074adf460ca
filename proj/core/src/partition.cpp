#include "dgram/partition.hpp"

#include <algorithm>
#include <charconv>

#include "dgram/error.hpp"

namespace dgram {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

void UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
}

SetPartition::SetPartition(std::size_t n) : label_(n), nblocks_(n) {
    for (std::size_t i = 0; i < n; ++i) label_[i] = static_cast<std::uint32_t>(i);
}

SetPartition SetPartition::from_labels(const std::vector<std::uint32_t>& labels) {
    SetPartition p;
    p.label_.resize(labels.size());
    std::vector<std::uint32_t> remap;
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        std::uint32_t l = labels[v];
        if (l >= remap.size()) remap.resize(static_cast<std::size_t>(l) + 1, unset);
        if (remap[l] == unset) remap[l] = next++;
        p.label_[v] = remap[l];
    }
    p.nblocks_ = next;
    return p;
}

SetPartition SetPartition::from_union_find(UnionFind& uf) {
    std::vector<std::uint32_t> labels(uf.size());
    for (std::size_t v = 0; v < uf.size(); ++v) labels[v] = static_cast<std::uint32_t>(uf.find(v));
    return from_labels(labels);
}

SetPartition SetPartition::from_pairs(std::size_t n,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    UnionFind uf(n);
    for (auto [i, j] : pairs) {
        if (i >= n || j >= n) throw ValidationError("from_pairs: index out of range");
        uf.unite(i, j);
    }
    return from_union_find(uf);
}

SetPartition SetPartition::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> labels(n, unset);
    std::uint32_t b = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw ValidationError("from_blocks: empty block");
        for (std::size_t v : block) {
            if (v >= n) throw ValidationError("from_blocks: index out of range");
            if (labels[v] != unset) throw ValidationError("from_blocks: blocks overlap");
            labels[v] = b;
        }
        ++b;
    }
    if (std::find(labels.begin(), labels.end(), unset) != labels.end())
        throw ValidationError("from_blocks: blocks do not cover the ground set");
    return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ValidationError("partition text must look like {0,1|2}");
    text = text.substr(1, text.size() - 2);
    std::vector<std::vector<std::size_t>> blocks(1);
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '|') {
            blocks.emplace_back();
            ++pos;
        } else if (c == ',' || c == ' ') {
            ++pos;
        } else {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
            if (ec != std::errc()) throw ValidationError("bad integer in partition text");
            pos = static_cast<std::size_t>(ptr - text.data());
            blocks.back().push_back(v);
            n = std::max(n, v + 1);
        }
    }
    if (text.empty()) return SetPartition(0);
    return from_blocks(n, blocks);
}

std::vector<std::vector<std::uint32_t>> SetPartition::blocks() const {
    std::vector<std::vector<std::uint32_t>> out(nblocks_);
    for (std::size_t v = 0; v < label_.size(); ++v) out[label_[v]].push_back(static_cast<std::uint32_t>(v));
    return out;
}

std::string SetPartition::str() const {
    std::string s = "{";
    bool first_block = true;
    for (const auto& b : blocks()) {
        if (!first_block) s += '|';
        first_block = false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b[i]);
        }
    }
    return s + "}";
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size()) throw ValidationError("join: ground size mismatch");
    const std::size_t n = a.ground_size();
    UnionFind uf(n);
    std::vector<std::size_t> first_a(a.num_blocks(), n), first_b(b.num_blocks(), n);
    for (std::size_t v = 0; v < n; ++v) {
        auto& fa = first_a[a.block_of(v)];
        if (fa == n) fa = v; else uf.unite(fa, v);
        auto& fb = first_b[b.block_of(v)];
        if (fb == n) fb = v; else uf.unite(fb, v);
    }
    return SetPartition::from_union_find(uf);
}

bool is_coarser(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size()) throw ValidationError("is_coarser: ground size mismatch");
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> host(b.num_blocks(), unset);
    for (std::size_t v = 0; v < a.ground_size(); ++v) {
        auto& h = host[b.block_of(v)];
        if (h == unset) h = a.block_of(v);
        else if (h != a.block_of(v)) return false;
    }
    return true;
}

std::vector<SetPartition> all_partitions(std::size_t n) {
    std::vector<SetPartition> out;
    if (n == 0) {
        out.emplace_back(0);
        return out;
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<std::uint32_t> rgs(n, 0), mx(n, 0);
    while (true) {
        out.push_back(SetPartition::from_labels(rgs));
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] > mx[i - 1]) --i;
        if (i == 0) break;
        ++rgs[i];
        mx[i] = std::max(mx[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            mx[j] = mx[i];
        }
    }
    return out;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto l : p.labels()) {
        h ^= l + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace dgram
