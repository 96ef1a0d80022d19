#include "atfkit/catalog.hpp"
#include "atfkit/io.hpp"
#include "atfkit/markov.hpp"
#include "atfkit/orbifold.hpp"
#include "atfkit/render.hpp"

#include <benchmark/benchmark.h>

using namespace atf;

namespace {

const ATBD& plane() {
    static const ATBD d = build("cp2.A").diagram;
    return d;
}

void BM_Mutate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mutate(plane(), 0));
}
BENCHMARK(BM_Mutate);

// Coordinates grow along a descending word; this tracks the cost of exact arithmetic with depth.
void BM_MutateWord(benchmark::State& state) {
    std::vector<std::pair<std::size_t, Side>> word;
    for (int i = 0; i < state.range(0); ++i) word.emplace_back(static_cast<std::size_t>(i % 3), Side::Left);
    for (auto _ : state) benchmark::DoNotOptimize(mutate_word(plane(), word));
}
BENCHMARK(BM_MutateWord)->DenseRange(2, 16, 2);

void BM_Canonicalize(benchmark::State& state) {
    ATBD d = mutate_word(plane(), {{0, Side::Left}, {1, Side::Left}, {2, Side::Left}});
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(d));
}
BENCHMARK(BM_Canonicalize);

void BM_Degree(benchmark::State& state) {
    LimitOrbifold o = limit_orbifold(mutate(plane(), 1));
    for (auto _ : state) benchmark::DoNotOptimize(degree(o));
}
BENCHMARK(BM_Degree);

void BM_EnumerateTree(benchmark::State& state) {
    MarkovEqn eq = MarkovEqnII{3, {1, 1, 1}};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tree(eq, Int(state.range(0))));
}
BENCHMARK(BM_EnumerateTree)->RangeMultiplier(100)->Range(100, 1000000);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify_type_I());
}
BENCHMARK(BM_Classify);

void BM_CatalogBuild(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build("cp2x8.C"));
}
BENCHMARK(BM_CatalogBuild);

void BM_RenderSvg(benchmark::State& state) {
    RenderOptions opts;
    opts.show_grid = true;
    for (auto _ : state) benchmark::DoNotOptimize(render_svg(plane(), opts));
}
BENCHMARK(BM_RenderSvg);

void BM_RoundTrip(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(read_diagram(write_diagram(plane())));
}
BENCHMARK(BM_RoundTrip);

}  // namespace
BENCHMARK_MAIN();
