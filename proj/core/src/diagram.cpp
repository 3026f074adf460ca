#include "dgram/diagram.hpp"

#include <algorithm>

#include "dgram/error.hpp"

namespace dgram {

namespace {

void unite_blocks(UnionFind& uf, const SetPartition& p, std::size_t offset) {
    std::vector<std::size_t> first(p.num_blocks(), static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < p.ground_size(); ++v) {
        auto& f = first[p.block_of(v)];
        if (f == static_cast<std::size_t>(-1)) f = v + offset;
        else uf.unite(f, v + offset);
    }
}

}  // namespace

StackResult stack(const SetPartition& upper, const SetPartition& lower, std::size_t n) {
    if (upper.ground_size() != 2 * n || lower.ground_size() != 2 * n)
        throw ValidationError("stack: diagram size mismatch");
    // Ground set: upper top 0..n-1, middle n..2n-1, lower bottom 2n..3n-1.
    UnionFind uf(3 * n);
    unite_blocks(uf, upper, 0);
    unite_blocks(uf, lower, n);

    std::vector<std::uint8_t> touch(3 * n, 0);  // bit0 top, bit1 bottom, bit2 seen
    for (std::size_t v = 0; v < 3 * n; ++v) {
        auto r = uf.find(v);
        touch[r] |= 4;
        if (v < n) touch[r] |= 1;
        else if (v >= 2 * n) touch[r] |= 2;
    }
    StackResult res;
    for (std::size_t v = 0; v < 3 * n; ++v) {
        if (!(touch[v] & 4)) continue;
        if ((touch[v] & 3) == 0) ++res.loops;
        if ((touch[v] & 3) == 3) ++res.propagating;
    }
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        labels[v] = static_cast<std::uint32_t>(uf.find(v));
        labels[n + v] = static_cast<std::uint32_t>(uf.find(2 * n + v));
    }
    res.part = SetPartition::from_labels(labels);
    return res;
}

std::size_t propagating_number(const SetPartition& part, std::size_t n) {
    std::vector<std::uint8_t> seen(part.num_blocks(), 0);
    for (std::size_t v = 0; v < 2 * n; ++v) seen[part.block_of(v)] |= (v < n) ? 1 : 2;
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 3));
}

PartitionDiagram::PartitionDiagram(std::size_t k, SetPartition part) : k_(k), part_(std::move(part)) {
    if (part_.ground_size() != 2 * k) throw ValidationError("partition diagram needs 2k vertices");
}

PartitionDiagram PartitionDiagram::identity(std::size_t k) {
    std::vector<std::uint32_t> labels(2 * k);
    for (std::size_t i = 0; i < k; ++i) labels[i] = labels[k + i] = static_cast<std::uint32_t>(i);
    return PartitionDiagram(k, SetPartition::from_labels(labels));
}

std::size_t PartitionDiagram::propagating_number() const { return dgram::propagating_number(part_, k_); }

std::vector<std::vector<int>> PartitionDiagram::signed_blocks() const {
    std::vector<std::vector<int>> out;
    for (const auto& b : part_.blocks()) {
        std::vector<int> sb;
        for (auto v : b) sb.push_back(v < k_ ? static_cast<int>(v) + 1 : -static_cast<int>(v - k_ + 1));
        out.push_back(std::move(sb));
    }
    return out;
}

std::string PartitionDiagram::str() const {
    std::string s = "[";
    bool first_block = true;
    for (const auto& b : part_.blocks()) {
        if (!first_block) s += '|';
        first_block = false;
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            if (b[i] < k_) s += std::to_string(b[i] + 1);
            else s += std::to_string(b[i] - k_ + 1) + "′";
        }
        s += '}';
    }
    return s + "]";
}

PartitionDiagram PartitionDiagram::parse(std::size_t k, const std::string& text) {
    static const std::string prime = "′";
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ValidationError("diagram text must look like [{1,2′}|{2}|{1′}]");
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t pos = 1;
    const std::size_t end = text.size() - 1;
    while (pos < end) {
        char c = text[pos];
        if (c == '{') {
            blocks.emplace_back();
            ++pos;
        } else if (c == '}' || c == ',' || c == '|' || c == ' ') {
            ++pos;
        } else if (c >= '0' && c <= '9') {
            std::size_t v = 0;
            while (pos < end && text[pos] >= '0' && text[pos] <= '9') v = v * 10 + (text[pos++] - '0');
            bool bottom = false;
            if (text.compare(pos, prime.size(), prime) == 0) {
                bottom = true;
                pos += prime.size();
            } else if (pos < end && text[pos] == '\'') {
                bottom = true;
                ++pos;
            }
            if (v == 0 || v > k || blocks.empty()) throw ValidationError("diagram vertex out of range");
            blocks.back().push_back(bottom ? k + v - 1 : v - 1);
        } else {
            throw ValidationError("unexpected character in diagram text");
        }
    }
    return PartitionDiagram(k, SetPartition::from_blocks(2 * k, blocks));
}

DiagramProduct multiply(const PartitionDiagram& d1, const PartitionDiagram& d2) {
    if (d1.k() != d2.k()) throw ValidationError("multiply: k mismatch");
    auto r = stack(d1.partition(), d2.partition(), d1.k());
    return {PartitionDiagram(d1.k(), std::move(r.part)), r.loops};
}

std::size_t RowConfig::through_count() const {
    return static_cast<std::size_t>(std::count(through.begin(), through.end(), true));
}

SetPartition mirror(const RowConfig& row) {
    const std::size_t n = row.part.ground_size();
    const auto nb = static_cast<std::uint32_t>(row.part.num_blocks());
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        auto b = row.part.block_of(v);
        labels[v] = b;
        labels[n + v] = row.through[b] ? b : nb + b;
    }
    return SetPartition::from_labels(labels);
}

bool is_symmetric(const SetPartition& part, std::size_t n) {
    // Top and bottom restrictions must coincide, and a block meeting both rows
    // must meet them in the same positions.
    std::vector<std::uint32_t> top(n), bot(n);
    for (std::size_t v = 0; v < n; ++v) {
        top[v] = part.block_of(v);
        bot[v] = part.block_of(n + v);
    }
    if (SetPartition::from_labels(top) != SetPartition::from_labels(bot)) return false;
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if ((part.block_of(v) == part.block_of(n + w)) != (part.block_of(v) == part.block_of(n + v) && top[v] == top[w]))
                return false;
        }
    }
    return true;
}

RowConfig row_config(const SetPartition& part, std::size_t n) {
    if (part.ground_size() != 2 * n || !is_symmetric(part, n))
        throw ValidationError("row_config: diagram is not symmetric");
    std::vector<std::uint32_t> top(n);
    for (std::size_t v = 0; v < n; ++v) top[v] = part.block_of(v);
    RowConfig row{SetPartition::from_labels(top), {}};
    row.through.assign(row.part.num_blocks(), false);
    for (std::size_t v = 0; v < n; ++v)
        if (part.block_of(v) == part.block_of(n + v)) row.through[row.part.block_of(v)] = true;
    return row;
}

std::vector<RowConfig> partition_row_configs(std::size_t k, std::size_t s) {
    std::vector<RowConfig> out;
    for (auto& p : all_partitions(k)) {
        for_each_subset(p.num_blocks(), s, [&](std::uint64_t mask) {
            RowConfig row{p, std::vector<bool>(p.num_blocks())};
            for (std::size_t b = 0; b < p.num_blocks(); ++b) row.through[b] = (mask >> b) & 1;
            out.push_back(std::move(row));
        });
    }
    return out;
}

}  // namespace dgram
