#include "pql/construct.hpp"
#include "pql/generate.hpp"
#include "pql/solve.hpp"
#include "pql/validate.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pql;

namespace {

Weight rand_w(std::mt19937_64& rng) { return Weight(static_cast<long long>(rng() % 1000) + 1); }

RootedTree make_tree(int n, std::mt19937_64& rng) {
    RootedTree t{WeightedGraph(n), 0};
    for (int v = 1; v < n; ++v) t.graph.add_edge(static_cast<int>(rng() % v), v, rand_w(rng));
    return t;
}

// Spine of n/2 vertices, each remaining vertex a leaf on a random spine vertex.
Caterpillar make_caterpillar(int n, std::mt19937_64& rng) {
    int k = std::max(2, n / 2);
    Caterpillar c{WeightedGraph(n), {}};
    for (int i = 0; i < k; ++i) c.path.push_back(i);
    for (int i = 0; i + 1 < k; ++i) c.graph.add_edge(i, i + 1, rand_w(rng));
    for (int v = k; v < n; ++v) c.graph.add_edge(static_cast<int>(rng() % k), v, rand_w(rng));
    return c;
}

WeightedGraph make_cycle(int n, std::mt19937_64& rng) {
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, rand_w(rng));
    return g;
}

LeggedCycle make_legged_cycle(int n, std::mt19937_64& rng) {
    int c = std::max(3, n - n / 4);
    LeggedCycle l;
    l.graph = WeightedGraph(n);
    for (int i = 0; i < c; ++i) {
        l.cycle.push_back(i);
        l.graph.add_edge(i, (i + 1) % c, rand_w(rng));
    }
    for (int v = c; v < n; ++v) l.graph.add_edge(static_cast<int>(rng() % c), v, rand_w(rng));
    return l;
}

void BM_tree(benchmark::State& st) {
    std::mt19937_64 rng(1);
    auto t = make_tree(static_cast<int>(st.range(0)), rng);
    for (auto _ : st) benchmark::DoNotOptimize(layout_tree(t));
    st.SetComplexityN(st.range(0));
}

void BM_caterpillar(benchmark::State& st) {
    std::mt19937_64 rng(2);
    auto c = make_caterpillar(static_cast<int>(st.range(0)), rng);
    for (auto _ : st) benchmark::DoNotOptimize(layout_caterpillar(c, c.path.back()));
    st.SetComplexityN(st.range(0));
}

void BM_cycle(benchmark::State& st) {
    std::mt19937_64 rng(3);
    auto g = make_cycle(static_cast<int>(st.range(0)), rng);
    for (auto _ : st) benchmark::DoNotOptimize(layout_cycle(g, 0));
    st.SetComplexityN(st.range(0));
}

void BM_legged_cycle(benchmark::State& st) {
    std::mt19937_64 rng(4);
    auto l = make_legged_cycle(static_cast<int>(st.range(0)), rng);
    for (auto _ : st) benchmark::DoNotOptimize(layout_legged_cycle(l));
    st.SetComplexityN(st.range(0));
}

void BM_sweep(benchmark::State& st) {
    std::mt19937_64 rng(5);
    auto t = make_tree(static_cast<int>(st.range(0)), rng);
    auto l = layout_tree(t).layout;
    for (auto _ : st) benchmark::DoNotOptimize(simulate_sweep(l));
    st.SetComplexityN(st.range(0));
}

void BM_fixed_order_knn(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto g = gen_knn_weights(n);
    auto ord = VertexOrdering::identity(2 * n);
    for (auto _ : st) benchmark::DoNotOptimize(solve_fixed_order(g, ord));
}

void BM_free_order_minor(benchmark::State& st) {
    auto g = gen_forbidden_minor(static_cast<int>(st.range(0)));
    SolveOptions opt;
    opt.threads = 1;
    for (auto _ : st) benchmark::DoNotOptimize(solve_free_order(g, opt));
}

}  // namespace

BENCHMARK(BM_tree)->RangeMultiplier(2)->Range(64, 1 << 14)->Complexity();
BENCHMARK(BM_caterpillar)->RangeMultiplier(2)->Range(64, 1 << 14)->Complexity();
BENCHMARK(BM_cycle)->RangeMultiplier(2)->Range(64, 1 << 14)->Complexity();
BENCHMARK(BM_legged_cycle)->RangeMultiplier(2)->Range(64, 1 << 14)->Complexity();
BENCHMARK(BM_sweep)->RangeMultiplier(2)->Range(64, 1 << 14)->Complexity();
BENCHMARK(BM_fixed_order_knn)->DenseRange(2, 6);
BENCHMARK(BM_free_order_minor)->DenseRange(1, 8);
BENCHMARK_MAIN();
