#include <benchmark/benchmark.h>

#include "qprop/analysis.hpp"
#include "qprop/graph.hpp"
#include "qprop/rng.hpp"
#include "qprop/sampler.hpp"

using namespace qprop;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    SeqRng rng(seed, 7);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.below(2) == 1);
    }
    return m;
}

void BM_Eliminate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitMatrix m = random_matrix(n, 2 * n, 1);
    const BitVector b(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eliminate(m, b).rank);
    }
}
BENCHMARK(BM_Eliminate)->Arg(64)->Arg(256)->Arg(512);

void BM_MatVec(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitMatrix m = random_matrix(n, 4 * n, 2);
    SeqRng rng(3, 3);
    BitVector v(4 * n);
    for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng.below(2) == 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_vec(m, v));
    }
}
BENCHMARK(BM_MatVec)->Arg(64)->Arg(1024);

void BM_BuildRsg(benchmark::State& state) {
    const Circuit c = gen_random_global(static_cast<int>(state.range(0)), 10, state.range(0) / 4, 11);
    const Epstg g = build_epstg(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_rsg(g).matrix().rows());
    }
}
BENCHMARK(BM_BuildRsg)->Arg(64)->Arg(256);

void BM_BruteForce(benchmark::State& state) {
    const Rsg rsg = build_rsg(build_epstg(gen_staircase_transversal(static_cast<int>(state.range(0)))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_distribution(rsg, 0.05).size());
    }
}
BENCHMARK(BM_BruteForce)->Arg(4)->Arg(6);

void BM_DpTransversal(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(dp_transversal(static_cast<int>(state.range(0)), 0.001).size());
    }
}
BENCHMARK(BM_DpTransversal)->Arg(50)->Arg(500);

void BM_Sample(benchmark::State& state) {
    const Rsg rsg = build_rsg(build_epstg(gen_random_global(18, 5, 4, 5)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(rsg, 0.02, static_cast<std::uint64_t>(state.range(0)), 9).shots);
    }
}
BENCHMARK(BM_Sample)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
