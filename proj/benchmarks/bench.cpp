#include <benchmark/benchmark.h>

#include "dgram/determinant.hpp"
#include "dgram/reduction.hpp"
#include "dgram/stirling.hpp"

using namespace dgram;

namespace {

// (algebra, k) with the largest cell at that k
void cell_args(benchmark::internal::Benchmark* b) {
    for (int alg = 0; alg < 3; ++alg)
        for (int k = 2; k <= (alg == 0 ? 4 : 3); ++k) b->Args({alg, k});
}

std::pair<std::size_t, std::size_t> largest_pair(Algebra alg, std::size_t k) {
    std::pair<std::size_t, std::size_t> best{0, 0};
    std::size_t n = 0;
    for (auto p : admissible_pairs(alg, k)) {
        auto m = count_J(alg, k, p.first, p.second);
        if (m > n) {
            n = m;
            best = p;
        }
    }
    return best;
}

Algebra alg_of(const benchmark::State& st) { return static_cast<Algebra>(st.range(0)); }

void BM_Enumerate(benchmark::State& st) {
    auto alg = alg_of(st);
    std::size_t k = st.range(1);
    auto [s1, s2] = largest_pair(alg, k);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_J(alg, k, s1, s2));
    st.SetLabel(to_string(alg));
}
BENCHMARK(BM_Enumerate)->Apply(cell_args)->Unit(benchmark::kMillisecond);

void BM_BuildGram(benchmark::State& st) {
    auto alg = alg_of(st);
    std::size_t k = st.range(1);
    auto [s1, s2] = largest_pair(alg, k);
    auto J = enumerate_J(alg, k, s1, s2);
    for (auto _ : st) benchmark::DoNotOptimize(build_gram(J));
    st.SetLabel(to_string(alg) + " n=" + std::to_string(J.size()));
}
BENCHMARK(BM_BuildGram)->Apply(cell_args)->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& st) {
    auto alg = alg_of(st);
    std::size_t k = st.range(1);
    auto [s1, s2] = largest_pair(alg, k);
    auto J = enumerate_J(alg, k, s1, s2);
    auto G = build_gram(J);
    auto P = coarsening_poset(J);
    for (auto _ : st) benchmark::DoNotOptimize(reduce(G, J, P));
    st.SetLabel(to_string(alg) + " n=" + std::to_string(J.size()));
}
BENCHMARK(BM_Reduce)->Apply(cell_args)->Unit(benchmark::kMillisecond);

void BM_DetDirect(benchmark::State& st) {
    auto alg = alg_of(st);
    std::size_t k = st.range(1);
    auto [s1, s2] = largest_pair(alg, k);
    auto G = build_gram(alg, k, s1, s2);
    for (auto _ : st) benchmark::DoNotOptimize(det_direct(G.entries));
    st.SetLabel(to_string(alg) + " n=" + std::to_string(G.size()));
}
BENCHMARK(BM_DetDirect)->Apply(cell_args)->Unit(benchmark::kMillisecond);

void BM_StirlingZ2(benchmark::State& st) {
    std::size_t r = st.range(0);
    for (auto _ : st) {
        mpz_class sum = 0;
        for (std::size_t p1 = 0; p1 <= r; ++p1)
            for (std::size_t p2 = 0; p1 + p2 <= 2 * r; ++p2) sum += b_z2({2, 2, r, r, p1, p2});
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_StirlingZ2)->DenseRange(2, 8, 3);

}  // namespace
BENCHMARK_MAIN();
