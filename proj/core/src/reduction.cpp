#include "dgram/reduction.hpp"

#include <map>
#include <stdexcept>

#include "dgram/error.hpp"

namespace dgram {

CoarseningPoset coarsening_poset(const JSet& J) {
    const std::size_t n = J.size();
    CoarseningPoset P{n, Matrix<std::uint8_t>(n, n, 0)};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            P.leq(u, v) = is_coarser_config(J.elems[u].row, J.elems[u].kinds, J.elems[v].row, J.elems[v].kinds);
    return P;
}

std::optional<JoinResult> join_in_J(const JSet& J, std::size_t u, std::size_t v) {
    const auto& a = J.elems.at(u);
    const auto& b = J.elems.at(v);
    if (stack(a.diagram, b.diagram, J.row_size()).propagating != J.propagating()) return std::nullopt;
    JoinResult res;
    res.row.part = join(a.row.part, b.row.part);
    res.row.through.assign(res.row.part.num_blocks(), false);
    for (std::size_t x = 0; x < res.row.part.ground_size(); ++x)
        if (a.row.through[a.row.part.block_of(x)] || b.row.through[b.row.part.block_of(x)])
            res.row.through[res.row.part.block_of(x)] = true;
    if (J.algebra == Algebra::Partition) res.kinds.assign(res.row.part.num_blocks(), BlockKind::Z2);
    else res.kinds = row_kinds(res.row.part);
    for (std::size_t w = 0; w < J.size(); ++w) {
        if (J.elems[w].row == res.row) {
            res.index = w;
            break;
        }
    }
    return res;
}

std::size_t BlockDecomposition::hard_diffs() const {
    std::size_t n = 0;
    for (const auto& d : diffs) n += !d.informative;
    return n;
}

bool in_rho_block(const JSet& J, std::size_t u) {
    if (J.algebra != Algebra::Signed || J.s1 >= J.k) return false;
    const auto& key = J.elems[u].key;
    return J.s1 + J.s2 + key.r1 + key.r2 == J.k;
}

namespace {

// t1: e-pairs through in u but horizontal in v; t2: same for Z2 blocks.
// Only defined when both diagrams share the same row partition.
std::optional<std::pair<std::size_t, std::size_t>> swap_pattern(const JElement& u, const JElement& v) {
    if (u.row.part != v.row.part) return std::nullopt;
    std::size_t e = 0, z = 0;
    for (std::size_t b = 0; b < u.kinds.size(); ++b) {
        if (u.row.through[b] && !v.row.through[b]) (u.kinds[b] == BlockKind::Z2 ? z : e)++;
    }
    return std::make_pair(e / 2, z);
}

mpz_class factorial(std::size_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Poly pattern_value(const JSet& J, const JElement& u, std::size_t t1, std::size_t t2) {
    const long s1 = static_cast<long>(J.s1), s2 = static_cast<long>(J.s2);
    const long r1 = static_cast<long>(u.key.r1), r2 = static_cast<long>(u.key.r2);
    mpz_class c = factorial(t1) * factorial(t2);
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), t1);
    if ((t1 + t2) % 2) c = -c;
    Poly base = J.algebra == Algebra::Partition
                    ? phi_partition(s1 + static_cast<long>(t2), r2 - static_cast<long>(t2))
                    : phi_z2(s1 + static_cast<long>(t1), s2 + static_cast<long>(t2), r1 - static_cast<long>(t1),
                             r2 - static_cast<long>(t2));
    return base * mpq_class(c);
}

Poly diagonal_value(const JSet& J, const JElement& u) {
    if (J.algebra == Algebra::Partition) return phi_partition(static_cast<long>(J.s1), static_cast<long>(u.key.r2));
    return phi_z2(static_cast<long>(J.s1), static_cast<long>(J.s2), static_cast<long>(u.key.r1),
                  static_cast<long>(u.key.r2));
}

std::string block_label(const JSet& J, std::size_t u) {
    if (in_rho_block(J, u)) return "rho";
    const auto& key = J.elems[u].key;
    if (J.algebra == Algebra::Partition) return "r=" + std::to_string(key.r2);
    return "r1=" + std::to_string(key.r1) + ",r2=" + std::to_string(key.r2);
}

}  // namespace

Poly predicted_entry(const JSet& J, std::size_t u, std::size_t v, bool* informative) {
    if (informative) *informative = false;
    const auto& a = J.elems.at(u);
    const auto& b = J.elems.at(v);
    if (in_rho_block(J, u) && in_rho_block(J, v)) {
        Poly tail = phi_partition(static_cast<long>(J.s2), static_cast<long>(J.k - J.s1 - J.s2));
        if (u == v) return diagonal_value(J, a) + tail;
        if (informative) *informative = true;
        if (stack(a.diagram, b.diagram, J.row_size()).propagating == J.propagating())
            return (a.key.r1 + b.key.r1) % 2 ? -tail : tail;
        if (a.key.r1 == b.key.r1 && a.key.r2 == b.key.r2) {
            if (auto t = swap_pattern(a, b)) return pattern_value(J, a, t->first, t->second) + tail;
        }
        return {};
    }
    if (a.key.r1 != b.key.r1 || a.key.r2 != b.key.r2) return {};
    if (u == v) return diagonal_value(J, a);
    if (auto t = swap_pattern(a, b)) return pattern_value(J, a, t->first, t->second);
    return {};
}

std::vector<ReducedBlock> predicted_blocks(const JSet& J) {
    std::vector<ReducedBlock> blocks;
    std::map<std::string, std::size_t> where;
    for (std::size_t u = 0; u < J.size(); ++u) {
        auto label = block_label(J, u);
        auto [it, fresh] = where.emplace(label, blocks.size());
        if (fresh) blocks.push_back(ReducedBlock{label, label == "rho", {}, {}, {}});
        blocks[it->second].indices.push_back(u);
    }
    for (auto& blk : blocks) {
        const std::size_t m = blk.indices.size();
        blk.predicted = Matrix<Poly>(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) blk.predicted(a, b) = predicted_entry(J, blk.indices[a], blk.indices[b]);
    }
    return blocks;
}

Matrix<mpz_class> transform_matrix(const CoarseningPoset& P, ReductionMethod method) {
    const std::size_t n = P.n;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < u; ++v)
            if (P(u, v)) throw std::logic_error("coarsening relation is not compatible with the key order");
    Matrix<mpz_class> T(n, n, 0);
    if (method == ReductionMethod::Sequential) {
        // t_j = e_j - sum over strictly coarser m of t_m
        for (std::size_t j = 0; j < n; ++j) {
            T(j, j) = 1;
            for (std::size_t m = 0; m < j; ++m) {
                if (!P(m, j)) continue;
                for (std::size_t i = 0; i <= m; ++i)
                    if (T(i, m) != 0) T(i, j) -= T(i, m);
            }
        }
        return T;
    }
    // Back substitution of Z T = I, restricted to the down-set of each column.
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> down;
        for (std::size_t m = 0; m <= j; ++m)
            if (P(m, j)) down.push_back(m);
        T(j, j) = 1;
        for (std::size_t a = down.size() - 1; a-- > 0;) {
            std::size_t i = down[a];
            mpz_class acc = 0;
            for (std::size_t b = a + 1; b < down.size(); ++b) {
                std::size_t m = down[b];
                if (P(i, m) && T(m, j) != 0) acc += T(m, j);
            }
            T(i, j) = -acc;
        }
    }
    return T;
}

namespace {

Matrix<Poly> reduce_mobius(const GramMatrix& G, const Matrix<mpz_class>& T) {
    const std::size_t n = G.size();
    int top = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) top = std::max(top, G.exponent(i, j));
    const std::size_t width = static_cast<std::size_t>(top) + 1;

    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> col(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m <= j; ++m)
            if (T(m, j) != 0) col[j].emplace_back(m, T(m, j));

    // GT(i, j) as dense integer coefficient rows.
    std::vector<mpz_class> gt(n * n * width, 0);
    auto at = [&](std::size_t i, std::size_t j) { return gt.begin() + static_cast<long>((i * n + j) * width); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto c = at(i, j);
            for (const auto& [m, t] : col[j]) {
                int e = G.exponent(i, m);
                if (e >= 0) c[e] += t;
            }
        }
    }
    Matrix<Poly> R(n, n);
    std::vector<mpz_class> acc(width);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (auto& a : acc) a = 0;
            for (const auto& [m, t] : col[i]) {
                auto c = at(m, j);
                for (std::size_t d = 0; d < width; ++d)
                    if (c[d] != 0) acc[d] += t * c[d];
            }
            std::vector<mpq_class> coeffs(acc.begin(), acc.end());
            R(i, j) = Poly(std::move(coeffs));
        }
    }
    return R;
}

Matrix<Poly> reduce_sequential(const GramMatrix& G, const CoarseningPoset& P) {
    const std::size_t n = G.size();
    Matrix<Poly> M = G.entries;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < j; ++m)
            if (P(m, j))
                for (std::size_t i = 0; i < n; ++i) M(i, j) -= M(i, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < i; ++m)
            if (P(m, i))
                for (std::size_t j = 0; j < n; ++j) M(i, j) -= M(m, j);
    return M;
}

}  // namespace

void compare(BlockDecomposition& decomp) {
    decomp.diffs.clear();
    decomp.off_block_nonzero.clear();
    const std::size_t n = decomp.reduced.rows();
    std::vector<std::size_t> owner(n, 0);
    for (std::size_t b = 0; b < decomp.blocks.size(); ++b)
        for (auto u : decomp.blocks[b].indices) owner[u] = b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (owner[i] != owner[j] && !decomp.reduced(i, j).is_zero()) decomp.off_block_nonzero.emplace_back(i, j);
    for (const auto& blk : decomp.blocks) {
        const std::size_t m = blk.indices.size();
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                if (blk.reduced(a, b) == blk.predicted(a, b)) continue;
                decomp.diffs.push_back(EntryDiff{blk.label, blk.indices[a], blk.indices[b], blk.reduced(a, b),
                                                 blk.predicted(a, b), blk.rho && a != b});
            }
        }
    }
}

BlockDecomposition reduce(const GramMatrix& G, const JSet& J, const CoarseningPoset& P, ReductionMethod method) {
    if (G.size() != J.size() || P.n != J.size()) throw ValidationError("reduce: key mismatch");
    for (std::size_t u = 0; u < J.size(); ++u)
        if (G.diagrams[u] != J.elems[u].text) throw ValidationError("reduce: key mismatch");
    BlockDecomposition D;
    D.algebra = G.algebra;
    D.k = G.k;
    D.s1 = G.s1;
    D.s2 = G.s2;
    D.transform = transform_matrix(P, method);
    D.reduced = method == ReductionMethod::Sequential ? reduce_sequential(G, P) : reduce_mobius(G, D.transform);
    D.blocks = predicted_blocks(J);
    for (auto& blk : D.blocks) blk.reduced = D.reduced.sub(blk.indices);
    compare(D);
    return D;
}

std::string transform_checksum(const Matrix<mpz_class>& T) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= ';';
        h *= 1099511628211ull;
    };
    feed(std::to_string(T.rows()));
    for (std::size_t i = 0; i < T.rows(); ++i)
        for (std::size_t j = 0; j < T.cols(); ++j) feed(T(i, j).get_str());
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int d = 15; d >= 0; --d, h >>= 4) out[static_cast<std::size_t>(d)] = hex[h & 15];
    return out;
}

}  // namespace dgram
