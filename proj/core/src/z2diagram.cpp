#include "dgram/z2diagram.hpp"

#include <algorithm>

#include "dgram/error.hpp"

namespace dgram {

bool is_swap_stable(const SetPartition& part) {
    if (part.ground_size() % 2) return false;
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> image(part.num_blocks(), unset);
    for (std::size_t v = 0; v < part.ground_size(); ++v) {
        auto& img = image[part.block_of(v)];
        auto target = part.block_of(swap_vertex(v));
        if (img == unset) img = target;
        else if (img != target) return false;
    }
    return true;
}

Z2Diagram::Z2Diagram(std::size_t k, SetPartition part) : k_(k), part_(std::move(part)) {
    if (part_.ground_size() != 4 * k) throw ValidationError("Z2 diagram needs 4k vertices");
    if (!is_swap_stable(part_)) throw ValidationError("diagram is not stable under the e/g swap");
}

Z2Diagram Z2Diagram::identity(std::size_t k) {
    return Z2Diagram(k, PartitionDiagram::identity(2 * k).partition());
}

BlockKind Z2Diagram::classify_block(std::size_t block_index) const {
    if (block_index >= part_.num_blocks()) throw ValidationError("classify_block: no such block");
    for (std::size_t v = 0; v < part_.ground_size(); ++v) {
        if (part_.block_of(v) == block_index)
            return part_.block_of(swap_vertex(v)) == block_index ? BlockKind::Z2 : BlockKind::EPair;
    }
    throw ValidationError("classify_block: no such block");
}

BlockKind Z2Diagram::classify_block(const std::vector<std::uint32_t>& block) const {
    if (block.empty() || block.front() >= part_.ground_size())
        throw ValidationError("classify_block: foreign block");
    auto b = part_.block_of(block.front());
    std::size_t size = 0;
    for (std::size_t v = 0; v < part_.ground_size(); ++v) size += part_.block_of(v) == b;
    bool ok = size == block.size() && std::all_of(block.begin(), block.end(), [&](std::uint32_t v) {
                  return v < part_.ground_size() && part_.block_of(v) == b;
              });
    if (!ok) throw ValidationError("classify_block: foreign block");
    return classify_block(b);
}

Z2Stats Z2Diagram::stats() const {
    const std::size_t n = 2 * k_;
    std::vector<std::uint8_t> rows(part_.num_blocks(), 0);
    for (std::size_t v = 0; v < 2 * n; ++v) rows[part_.block_of(v)] |= (v < n) ? 1 : 2;
    std::size_t e_through = 0, e_top = 0, e_bot = 0;
    Z2Stats st;
    for (std::size_t b = 0; b < rows.size(); ++b) {
        bool z2 = classify_block(b) == BlockKind::Z2;
        switch (rows[b]) {
            case 3: z2 ? ++st.s2 : ++e_through; break;
            case 1: z2 ? ++st.r2 : ++e_top; break;
            case 2: z2 ? ++st.r2p : ++e_bot; break;
            default: break;
        }
    }
    st.s1 = e_through / 2;
    st.r1 = e_top / 2;
    st.r1p = e_bot / 2;
    return st;
}

PartitionDiagram Z2Diagram::project() const {
    UnionFind uf(2 * k_);
    std::vector<std::size_t> first(part_.num_blocks(), static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < part_.ground_size(); ++v) {
        std::size_t col = (v < 2 * k_) ? v / 2 : k_ + (v - 2 * k_) / 2;
        auto& f = first[part_.block_of(v)];
        if (f == static_cast<std::size_t>(-1)) f = col;
        else uf.unite(f, col);
    }
    return PartitionDiagram(k_, SetPartition::from_union_find(uf));
}

std::pair<SetPartition, SetPartition> Z2Diagram::halves() const {
    const std::size_t n = 2 * k_;
    std::vector<std::uint32_t> top(n), bot(n);
    for (std::size_t v = 0; v < n; ++v) {
        top[v] = part_.block_of(v);
        bot[v] = part_.block_of(n + v);
    }
    return {SetPartition::from_labels(top), SetPartition::from_labels(bot)};
}

std::vector<std::vector<std::string>> Z2Diagram::token_blocks() const {
    const std::size_t n = 2 * k_;
    std::vector<std::vector<std::string>> out;
    for (const auto& b : part_.blocks()) {
        std::vector<std::string> toks;
        for (auto v : b) {
            bool bottom = v >= n;
            std::size_t local = bottom ? v - n : v;
            std::string t = std::to_string(local / 2 + 1);
            if (bottom) t += "′";
            t += (local % 2) ? 'g' : 'e';
            toks.push_back(std::move(t));
        }
        out.push_back(std::move(toks));
    }
    return out;
}

std::string Z2Diagram::str() const {
    std::string s = "[";
    bool first_block = true;
    for (const auto& b : token_blocks()) {
        if (!first_block) s += '|';
        first_block = false;
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += b[i];
        }
        s += '}';
    }
    return s + "]";
}

Z2Diagram Z2Diagram::parse(std::size_t k, const std::string& text) {
    static const std::string prime = "′";
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ValidationError("Z2 diagram text must look like [{1e,1′e}|...]");
    const std::size_t n = 2 * k;
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
            std::size_t i = 0;
            while (pos < end && text[pos] >= '0' && text[pos] <= '9') i = i * 10 + (text[pos++] - '0');
            bool bottom = false;
            if (text.compare(pos, prime.size(), prime) == 0) {
                bottom = true;
                pos += prime.size();
            } else if (pos < end && text[pos] == '\'') {
                bottom = true;
                ++pos;
            }
            if (pos >= end || (text[pos] != 'e' && text[pos] != 'g'))
                throw ValidationError("Z2 vertex token needs an e or g suffix");
            std::size_t fibre = text[pos++] == 'g' ? 1 : 0;
            if (i == 0 || i > k || blocks.empty()) throw ValidationError("Z2 vertex out of range");
            blocks.back().push_back((bottom ? n : 0) + 2 * (i - 1) + fibre);
        } else {
            throw ValidationError("unexpected character in Z2 diagram text");
        }
    }
    return Z2Diagram(k, SetPartition::from_blocks(2 * n, blocks));
}

Z2Product multiply(const Z2Diagram& d1, const Z2Diagram& d2) {
    if (d1.k() != d2.k()) throw ValidationError("multiply: k mismatch");
    auto r = stack(d1.partition(), d2.partition(), 2 * d1.k());
    return {Z2Diagram(d1.k(), std::move(r.part)), r.loops};
}

bool signed_window(std::size_t k, const Z2Stats& st) {
    if (st.s1 == k) return true;
    auto row_ok = [k](std::size_t edges, std::size_t r1) { return edges + 1 <= k || (edges == k && r1 != 0); };
    return row_ok(st.s1 + st.s2 + st.r1 + st.r2, st.r1) && row_ok(st.s1 + st.s2 + st.r1p + st.r2p, st.r1p);
}

bool is_signed_member(const Z2Diagram& d) { return signed_window(d.k(), d.stats()); }

std::vector<BlockKind> row_kinds(const SetPartition& row) {
    std::vector<BlockKind> kinds(row.num_blocks(), BlockKind::EPair);
    for (std::size_t v = 0; v < row.ground_size(); ++v)
        if (row.block_of(v) == row.block_of(swap_vertex(v))) kinds[row.block_of(v)] = BlockKind::Z2;
    return kinds;
}

std::vector<SetPartition> z2_stable_rows(std::size_t k) {
    std::vector<SetPartition> out;
    for (auto& p : all_partitions(2 * k))
        if (is_swap_stable(p)) out.push_back(std::move(p));
    return out;
}

RowCounts row_counts(const RowConfig& row, const std::vector<BlockKind>& kinds) {
    std::size_t e_through = 0, e_horizontal = 0;
    RowCounts c;
    for (std::size_t b = 0; b < kinds.size(); ++b) {
        bool z2 = kinds[b] == BlockKind::Z2;
        if (row.through[b]) z2 ? ++c.s2 : ++e_through;
        else z2 ? ++c.r2 : ++e_horizontal;
    }
    c.s1 = e_through / 2;
    c.r1 = e_horizontal / 2;
    return c;
}

std::vector<RowConfig> z2_row_configs(std::size_t k, std::size_t s1, std::size_t s2) {
    std::vector<RowConfig> out;
    for (auto& p : z2_stable_rows(k)) {
        auto kinds = row_kinds(p);
        std::vector<std::size_t> pair_reps, z2_blocks;
        std::vector<std::size_t> conj(p.num_blocks());
        for (std::size_t v = 0; v < p.ground_size(); ++v) conj[p.block_of(v)] = p.block_of(swap_vertex(v));
        for (std::size_t b = 0; b < p.num_blocks(); ++b) {
            if (kinds[b] == BlockKind::Z2) z2_blocks.push_back(b);
            else if (b < conj[b]) pair_reps.push_back(b);
        }
        for_each_subset(pair_reps.size(), s1, [&](std::uint64_t m1) {
            for_each_subset(z2_blocks.size(), s2, [&](std::uint64_t m2) {
                RowConfig row{p, std::vector<bool>(p.num_blocks())};
                for (std::size_t i = 0; i < pair_reps.size(); ++i)
                    if ((m1 >> i) & 1) row.through[pair_reps[i]] = row.through[conj[pair_reps[i]]] = true;
                for (std::size_t i = 0; i < z2_blocks.size(); ++i)
                    if ((m2 >> i) & 1) row.through[z2_blocks[i]] = true;
                out.push_back(std::move(row));
            });
        });
    }
    return out;
}

bool is_coarser_config(const RowConfig& u, const std::vector<BlockKind>& ku,
                       const RowConfig& v, const std::vector<BlockKind>& kv) {
    const auto& pu = u.part;
    const auto& pv = v.part;
    if (pu.ground_size() != pv.ground_size()) throw ValidationError("is_coarser_config: size mismatch");
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> host(pv.num_blocks(), unset);
    for (std::size_t x = 0; x < pv.ground_size(); ++x) {
        auto& h = host[pv.block_of(x)];
        if (h == unset) h = pu.block_of(x);
        else if (h != pu.block_of(x)) return false;
    }
    std::vector<bool> used(pu.num_blocks(), false);
    for (std::size_t b = 0; b < host.size(); ++b) {
        auto h = host[b];
        if (v.through[b]) {
            if (!u.through[h] || ku[h] != kv[b] || used[h]) return false;
            used[h] = true;
        } else if (kv[b] == BlockKind::Z2 && ku[h] != BlockKind::Z2) {
            return false;
        }
    }
    return true;
}

}  // namespace dgram
