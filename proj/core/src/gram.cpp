#include "dgram/gram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "dgram/error.hpp"

namespace dgram {

std::string to_string(Algebra a) {
    switch (a) {
        case Algebra::Partition: return "partition";
        case Algebra::Z2: return "z2";
        case Algebra::Signed: return "signed";
    }
    return "?";
}

Algebra parse_algebra(const std::string& name) {
    if (name == "partition") return Algebra::Partition;
    if (name == "z2") return Algebra::Z2;
    if (name == "signed") return Algebra::Signed;
    throw ValidationError("unknown algebra '" + name + "' (expected partition, z2 or signed)");
}

bool in_window(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2) {
    if (k == 0) return false;
    switch (alg) {
        case Algebra::Partition: return s2 == 0 && s1 <= k;
        case Algebra::Z2: return s1 + s2 <= k;
        case Algebra::Signed: return s1 + s2 + 1 <= k || (s1 == k && s2 == 0);
    }
    return false;
}

void check_window(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2) {
    if (in_window(alg, k, s1, s2)) return;
    std::string what = to_string(alg) + " algebra: k=" + std::to_string(k) + ", ";
    if (alg == Algebra::Partition) what += "s=" + std::to_string(s1) + " outside 0<=s<=k";
    else if (alg == Algebra::Z2) what += "s1+s2=" + std::to_string(s1 + s2) + " exceeds k";
    else what += "(s1,s2)=(" + std::to_string(s1) + "," + std::to_string(s2) + ") needs s1+s2<=k-1 or (s1,s2)=(k,0)";
    if (k == 0) what = "k must be at least 1";
    throw ValidationError(what);
}

std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(Algebra alg, std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t s1 = 0; s1 <= k; ++s1)
        for (std::size_t s2 = 0; s2 <= k; ++s2)
            if (in_window(alg, k, s1, s2)) out.emplace_back(s1, s2);
    return out;
}

std::size_t PartitionTuple::weight() const {
    std::size_t w = 0;
    for (const auto& p : parts)
        for (auto v : p) w += v;
    return w;
}

std::string PartitionTuple::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        const auto& p = parts[i];
        if (p.empty()) {
            s += "∅";
            continue;
        }
        for (std::size_t j = 0; j < p.size();) {
            std::size_t e = j;
            while (e < p.size() && p[e] == p[j]) ++e;
            if (j) s += '.';
            s += std::to_string(p[j]);
            if (e - j > 1) s += "^" + std::to_string(e - j);
            j = e;
        }
    }
    return s + ")";
}

bool tuple_less(const PartitionTuple& a, const PartitionTuple& b) {
    std::vector<std::size_t> la, lb, ca, cb;
    for (const auto& p : a.parts) {
        la.push_back(p.size());
        ca.insert(ca.end(), p.begin(), p.end());
    }
    for (const auto& p : b.parts) {
        lb.push_back(p.size());
        cb.insert(cb.end(), p.begin(), p.end());
    }
    if (la != lb) return la < lb;
    return ca > cb;
}

PartitionTuple underlying_partition(const RowConfig& row, const std::vector<BlockKind>& kinds, bool z2_family) {
    const auto& part = row.part;
    std::vector<std::size_t> size(part.num_blocks(), 0);
    for (std::size_t v = 0; v < part.ground_size(); ++v) ++size[part.block_of(v)];
    PartitionTuple t;
    if (!z2_family) {
        t.parts.resize(2);
        for (std::size_t b = 0; b < size.size(); ++b) t.parts[row.through[b] ? 0 : 1].push_back(size[b]);
    } else {
        t.parts.resize(4);
        std::vector<std::size_t> conj(part.num_blocks());
        for (std::size_t v = 0; v < part.ground_size(); ++v) conj[part.block_of(v)] = part.block_of(swap_vertex(v));
        for (std::size_t b = 0; b < size.size(); ++b) {
            bool z2 = kinds[b] == BlockKind::Z2;
            if (!z2 && conj[b] < b) continue;  // count each e-pair once
            std::size_t slot = (row.through[b] ? 0 : 2) + (z2 ? 1 : 0);
            t.parts[slot].push_back(z2 ? size[b] / 2 : size[b]);
        }
    }
    for (auto& p : t.parts) std::sort(p.begin(), p.end(), std::greater<>());
    return t;
}

PartitionTuple underlying_partition(const Z2Diagram& d) {
    RowConfig row = row_config(d.partition(), 2 * d.k());
    return underlying_partition(row, row_kinds(row.part), true);
}

PartitionTuple underlying_partition(const PartitionDiagram& d) {
    RowConfig row = row_config(d.partition(), d.k());
    return underlying_partition(row, std::vector<BlockKind>(row.part.num_blocks(), BlockKind::Z2), false);
}

namespace {

void check_tuple(const PartitionTuple& alpha, std::size_t nparts, std::size_t k) {
    if (alpha.parts.size() != nparts) throw ValidationError("partition tuple has the wrong number of parts");
    for (const auto& p : alpha.parts) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) throw ValidationError("partition tuple has a zero entry");
            if (i && p[i] > p[i - 1]) throw ValidationError("partition tuple parts must be weakly decreasing");
        }
    }
    if (alpha.weight() != k) throw ValidationError("partition tuple weight differs from k");
}

RowConfig finish_row(const std::vector<std::uint32_t>& labels, const std::vector<bool>& through_by_label) {
    RowConfig row{SetPartition::from_labels(labels), {}};
    row.through.assign(row.part.num_blocks(), false);
    for (std::size_t v = 0; v < labels.size(); ++v) row.through[row.part.block_of(v)] = through_by_label[labels[v]];
    return row;
}

}  // namespace

Z2Diagram standard_diagram(const PartitionTuple& alpha, std::size_t k) {
    check_tuple(alpha, 4, k);
    std::vector<std::uint32_t> labels(2 * k);
    std::vector<bool> through;
    std::size_t col = 0;
    for (std::size_t slot = 0; slot < 4; ++slot) {
        bool z2 = slot % 2 == 1;
        bool thr = slot < 2;
        for (auto m : alpha.parts[slot]) {
            auto e = static_cast<std::uint32_t>(through.size());
            through.push_back(thr);
            auto g = e;
            if (!z2) {
                g = static_cast<std::uint32_t>(through.size());
                through.push_back(thr);
            }
            for (std::size_t c = col; c < col + m; ++c) {
                labels[2 * c] = e;
                labels[2 * c + 1] = g;
            }
            col += m;
        }
    }
    return Z2Diagram(k, mirror(finish_row(labels, through)));
}

PartitionDiagram standard_partition_diagram(const PartitionTuple& alpha, std::size_t k) {
    check_tuple(alpha, 2, k);
    std::vector<std::uint32_t> labels(k);
    std::vector<bool> through;
    std::size_t col = 0;
    for (std::size_t slot = 0; slot < 2; ++slot) {
        for (auto m : alpha.parts[slot]) {
            auto b = static_cast<std::uint32_t>(through.size());
            through.push_back(slot == 0);
            for (std::size_t c = col; c < col + m; ++c) labels[c] = b;
            col += m;
        }
    }
    return PartitionDiagram(k, mirror(finish_row(labels, through)));
}

namespace {

bool keep_signed(std::size_t k, std::size_t s1, std::size_t s2, const RowCounts& c) {
    return signed_window(k, Z2Stats{s1, s2, c.r1, c.r2, c.r1, c.r2});
}

}  // namespace

std::size_t count_J(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2) {
    check_window(alg, k, s1, s2);
    if (alg == Algebra::Partition) return partition_row_configs(k, s1).size();
    std::size_t n = 0;
    for (const auto& row : z2_row_configs(k, s1, s2)) {
        if (alg == Algebra::Signed && !keep_signed(k, s1, s2, row_counts(row, row_kinds(row.part)))) continue;
        ++n;
    }
    return n;
}

JSet enumerate_J(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2) {
    check_window(alg, k, s1, s2);
    JSet J{alg, k, s1, s2, {}};
    if (alg == Algebra::Partition) {
        for (auto& row : partition_row_configs(k, s1)) {
            JElement el;
            el.kinds.assign(row.part.num_blocks(), BlockKind::Z2);
            el.key.r2 = row.part.num_blocks() - row.through_count();
            el.key.alpha = underlying_partition(row, el.kinds, false);
            el.diagram = mirror(row);
            el.text = PartitionDiagram(k, el.diagram).str();
            el.row = std::move(row);
            J.elems.push_back(std::move(el));
        }
    } else {
        for (auto& row : z2_row_configs(k, s1, s2)) {
            JElement el;
            el.kinds = row_kinds(row.part);
            auto c = row_counts(row, el.kinds);
            if (alg == Algebra::Signed && !keep_signed(k, s1, s2, c)) continue;
            el.key.r1 = c.r1;
            el.key.r2 = c.r2;
            el.key.alpha = underlying_partition(row, el.kinds, true);
            el.diagram = mirror(row);
            el.text = Z2Diagram(k, el.diagram).str();
            el.row = std::move(row);
            J.elems.push_back(std::move(el));
        }
    }
    std::sort(J.elems.begin(), J.elems.end(), [](const JElement& a, const JElement& b) {
        const auto &ka = a.key, &kb = b.key;
        if (ka.edges() != kb.edges()) return ka.edges() < kb.edges();
        if (ka.r1 + ka.r2 != kb.r1 + kb.r2) return ka.r1 + ka.r2 < kb.r1 + kb.r2;
        if (tuple_less(ka.alpha, kb.alpha)) return true;
        if (tuple_less(kb.alpha, ka.alpha)) return false;
        return a.text < b.text;
    });
    std::size_t ordinal = 0;
    for (std::size_t u = 0; u < J.elems.size(); ++u) {
        auto& key = J.elems[u].key;
        bool same = u > 0 && J.elems[u - 1].key.alpha == key.alpha && J.elems[u - 1].key.r1 == key.r1 &&
                    J.elems[u - 1].key.r2 == key.r2;
        ordinal = same ? ordinal + 1 : 1;
        key.i = ordinal;
    }
    return J;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("DIAGRAM_GRAM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

GramMatrix build_gram(const JSet& J) {
    const std::size_t n = J.size();
    GramMatrix G;
    G.algebra = J.algebra;
    G.k = J.k;
    G.s1 = J.s1;
    G.s2 = J.s2;
    for (const auto& el : J.elems) {
        G.keys.push_back(el.key);
        G.diagrams.push_back(el.text);
    }
    G.exponent = Matrix<int>(n, n, -1);
    const std::size_t row_size = J.row_size();
    const std::size_t prop = J.propagating();
    auto fill_rows = [&](std::size_t start, std::size_t stride) {
        for (std::size_t u = start; u < n; u += stride) {
            for (std::size_t v = 0; v < n; ++v) {
                auto r = stack(J.elems[u].diagram, J.elems[v].diagram, row_size);
                if (r.propagating == prop) G.exponent(u, v) = static_cast<int>(r.loops);
            }
        }
    };
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, n / 16));
    if (workers <= 1) {
        fill_rows(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(fill_rows, t, workers);
        for (auto& th : pool) th.join();
    }
    G.entries = Matrix<Poly>(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (G.exponent(u, v) >= 0) G.entries(u, v) = Poly::monomial(static_cast<std::size_t>(G.exponent(u, v)));
    return G;
}

GramMatrix build_gram(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2) {
    return build_gram(enumerate_J(alg, k, s1, s2));
}

}  // namespace dgram
