#include <benchmark/benchmark.h>

#include <random>

#include "spectralwl/counterexamples.hpp"
#include "spectralwl/eigen.hpp"
#include "spectralwl/equi.hpp"
#include "spectralwl/graph.hpp"
#include "spectralwl/oracle.hpp"
#include "spectralwl/refine.hpp"
#include "spectralwl/stats.hpp"

using namespace spectralwl;

namespace {

SymmetricMatrix random_symmetric(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double x = dist(rng);
            a[static_cast<std::size_t>(i) * n + j] = x;
            a[static_cast<std::size_t>(j) * n + i] = x;
        }
    return SymmetricMatrix(n, std::move(a));
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(rng) < p) edges.emplace_back(i, j);
    return Graph::create(n, std::move(edges));
}

}  // namespace

static void BM_eigendecompose(benchmark::State& state) {
    SymmetricMatrix m = random_symmetric(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(m));
}
BENCHMARK(BM_eigendecompose)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_epnn_distinguish_block_pair(benchmark::State& state) {
    auto duo = gen_epnn_counterexample();
    Quantizer q;
    for (auto _ : state)
        benchmark::DoNotOptimize(epnn_distinguish(duo.first, duo.second, 20, q));
}
BENCHMARK(BM_epnn_distinguish_block_pair)->Unit(benchmark::kMicrosecond);

static void BM_equi_proof_rule_block_pair(benchmark::State& state) {
    auto duo = gen_epnn_counterexample();
    Quantizer q;
    std::vector<UpdateRule> rules = {UpdateRule::proof_rule()};
    for (auto _ : state)
        benchmark::DoNotOptimize(equi_distinguish(duo.first, duo.second, rules, 20, q));
}
BENCHMARK(BM_equi_proof_rule_block_pair)->Unit(benchmark::kMicrosecond);

static void BM_signed_iso_orthonormal_pair(benchmark::State& state) {
    auto duo = gen_orthonormal_counterexample();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_signed_isomorphism(duo.first, duo.second, 1e-6));
}
BENCHMARK(BM_signed_iso_orthonormal_pair)->Unit(benchmark::kMicrosecond);

static void BM_graph_stats(benchmark::State& state) {
    Graph g = gnp_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(graph_stats(g, 1e-4, 1e-6));
}
BENCHMARK(BM_graph_stats)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
