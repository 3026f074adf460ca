#include "dgram/stirling.hpp"

#include <mutex>
#include <vector>

namespace dgram {

namespace {

mpz_class power(const mpz_class& base, std::size_t e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);  // 0^0 = 1
    return r;
}

}  // namespace

mpz_class stirling2(std::size_t n, std::size_t k) {
    static std::mutex mu;
    static std::vector<std::vector<mpz_class>> table{{1}};
    if (k > n) return 0;
    std::lock_guard lock(mu);
    while (table.size() <= n) {
        const auto& prev = table.back();
        std::size_t m = table.size();
        std::vector<mpz_class> row(m + 1, 0);
        for (std::size_t j = 1; j <= m; ++j) {
            row[j] = prev[j - 1];
            if (j < prev.size()) row[j] += j * prev[j];
        }
        table.push_back(std::move(row));
    }
    return table[n][k];
}

mpz_class binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class b_z2(const StirlingParams& p) {
    if (!p.in_window()) return 0;
    const mpz_class through = 2 * p.s1 + p.s2;
    const mpz_class z2_through = p.s2;
    mpz_class total = 0;
    for (std::size_t i = p.p1; i <= p.r1; ++i) {
        mpz_class inner = 0;
        for (std::size_t j = 0; j <= p.r1 - i; ++j) {
            mpz_class tail = 0;
            std::size_t l0 = p.p2 > j ? p.p2 - j : 0;
            for (std::size_t l = l0; l <= p.r2; ++l)
                tail += binomial(p.r2, l) * power(z2_through, p.r2 - l) * stirling2(l + j, p.p2);
            inner += binomial(p.r1 - i, j) * power(through, p.r1 - i - j) * tail;
        }
        total += binomial(p.r1, i) * power(2, i - p.p1) * stirling2(i, p.p1) * inner;
    }
    return total;
}

mpz_class b_partition(std::size_t s, std::size_t r, std::size_t p) {
    if (p > r) return 0;
    mpz_class total = 0;
    for (std::size_t i = p; i <= r; ++i) total += binomial(r, i) * power(s, r - i) * stirling2(i, p);
    return total;
}

mpz_class count_coarser_bruteforce(const Z2Diagram& d, std::size_t p1, std::size_t p2) {
    const std::size_t k = d.k();
    RowConfig v = row_config(d.partition(), 2 * k);
    auto kv = row_kinds(v.part);
    auto c = row_counts(v, kv);
    mpz_class count = 0;
    for (const auto& u : z2_row_configs(k, c.s1, c.s2)) {
        auto ku = row_kinds(u.part);
        auto cu = row_counts(u, ku);
        if (cu.r1 == p1 && cu.r2 == p2 && is_coarser_config(u, ku, v, kv)) ++count;
    }
    return count;
}

mpz_class count_coarser_bruteforce(const PartitionDiagram& d, std::size_t p) {
    const std::size_t k = d.k();
    RowConfig v = row_config(d.partition(), k);
    std::vector<BlockKind> kv(v.part.num_blocks(), BlockKind::Z2);
    mpz_class count = 0;
    for (const auto& u : partition_row_configs(k, v.through_count())) {
        if (u.part.num_blocks() - u.through_count() != p) continue;
        std::vector<BlockKind> ku(u.part.num_blocks(), BlockKind::Z2);
        if (is_coarser_config(u, ku, v, kv)) ++count;
    }
    return count;
}

}  // namespace dgram
