#include <benchmark/benchmark.h>

#include <random>

#include "mkc/families.hpp"
#include "mkc/graph.hpp"
#include "mkc/kcut.hpp"
#include "mkc/spectra.hpp"

namespace {

mkc::WeightedGraph random_graph(std::size_t n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<mkc::Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.push_back({u, v, 1.0});
        }
    }
    return mkc::WeightedGraph(n, std::move(edges));
}

void BM_Eigendecompose(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = mkc::adjacency(random_graph(n, 0.5, 7));
    for (auto _ : state) benchmark::DoNotOptimize(mkc::eigendecompose(a));
}
BENCHMARK(BM_Eigendecompose)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void BM_CompareBounds(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(mkc::compare_bounds(g, 3));
}
BENCHMARK(BM_CompareBounds)->Arg(20)->Arg(40);

void BM_ExactMaxKCut(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 13);
    for (auto _ : state) benchmark::DoNotOptimize(mkc::exact_max_kcut(g, 3));
}
BENCHMARK(BM_ExactMaxKCut)->Arg(8)->Arg(10)->Arg(12);

void BM_CertifyBo1(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto inst = mkc::gen_bo1_family(k, k + 4);
    for (auto _ : state) benchmark::DoNotOptimize(mkc::certify(inst));
}
BENCHMARK(BM_CertifyBo1)->Arg(3)->Arg(4)->Arg(6);

void BM_CertifyBo3(benchmark::State& state) {
    const auto inst = mkc::gen_bo3_family(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mkc::certify(inst));
}
BENCHMARK(BM_CertifyBo3)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
