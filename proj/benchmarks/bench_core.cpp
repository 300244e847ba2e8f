#include <benchmark/benchmark.h>

#include "dynclust/generators.hpp"
#include "dynclust/kz_static.hpp"
#include "dynclust/mpbi_incremental.hpp"
#include "dynclust/mpbi_static.hpp"
#include "dynclust/reduction.hpp"
#include "dynclust/spanner.hpp"
#include "dynclust/sssp.hpp"

using namespace dynclust;

namespace {

// Streams are split into a prefix that builds the starting graph and a tail
// that is replayed inside the timed loop.
constexpr std::size_t kTail = 200;

EdgeStream stream_for(std::size_t n) { return gnm_stream(n, 10 * n, 100, 42); }

void BM_OracleInsert(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = stream_for(n);
    const std::size_t prefix = s.edges.size() - kTail;
    const VertexId src[] = {0, 1, 2};
    for (auto _ : state) {
        state.PauseTiming();
        DynGraph g = build_graph(s, prefix);
        DistanceOracle oracle(g, src, 0.1);
        state.ResumeTiming();
        for (std::size_t j = prefix; j < s.edges.size(); ++j) {
            const auto& e = s.edges[j];
            g.insert_edge(e.u, e.v, e.w);
            benchmark::DoNotOptimize(oracle.insert_edge(e.u, e.v, e.w));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTail));
}
BENCHMARK(BM_OracleInsert)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_RunStatic(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DynGraph g = build_graph(stream_for(n));
    MpbiParams p;
    for (auto _ : state) benchmark::DoNotOptimize(run_static(g, p));
}
BENCHMARK(BM_RunStatic)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_HandleInsertion(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = stream_for(n);
    const std::size_t prefix = s.edges.size() - kTail;
    MpbiParams p;
    for (auto _ : state) {
        state.PauseTiming();
        DynGraph g = build_graph(s, prefix);
        IncrementalBicriteria bic(g, p);
        state.ResumeTiming();
        for (std::size_t j = prefix; j < s.edges.size(); ++j) {
            const auto& e = s.edges[j];
            g.insert_edge(e.u, e.v, e.w);
            benchmark::DoNotOptimize(bic.handle_insertion(e.u, e.v, e.w));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTail));
}
BENCHMARK(BM_HandleInsertion)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

std::vector<WeightedEdge> complete_instance(std::size_t p) {
    std::vector<WeightedEdge> edges;
    std::uint64_t x = 12345;
    for (NodeId a = 0; a < p; ++a) {
        for (NodeId b = a + 1; b < p; ++b) {
            x = x * 6364136223846793005ULL + 1442695040888963407ULL;
            edges.push_back({a, b, static_cast<double>(1 + (x >> 33) % 1000)});
        }
    }
    return edges;
}

void BM_SpannerBuild(benchmark::State& state) {
    const auto p = static_cast<std::size_t>(state.range(0));
    const auto edges = complete_instance(p);
    SpannerOptions opt;
    opt.deterministic = state.range(1) != 0;
    for (auto _ : state) {
        DynamicSpanner sp(p, edges, opt);
        benchmark::DoNotOptimize(sp.num_edges());
    }
}
BENCHMARK(BM_SpannerBuild)->Args({128, 0})->Args({128, 1})->Args({512, 0})->Args({512, 1})->Unit(benchmark::kMillisecond);

void BM_SolveWithDistances(benchmark::State& state) {
    const auto p = static_cast<std::size_t>(state.range(0));
    WeightedInstance inst;
    inst.num_nodes = p;
    inst.edges = complete_instance(p);
    inst.weights.assign(p, 1.0);
    inst.k = static_cast<std::size_t>(state.range(1));
    const auto dist = instance_distances(inst);
    for (auto _ : state) benchmark::DoNotOptimize(solve_with_distances(dist, inst.weights, inst.k, 1.0, {}));
}
BENCHMARK(BM_SolveWithDistances)->Args({128, 3})->Args({512, 1})->Args({512, 3})->Unit(benchmark::kMillisecond);

void BM_PipelineStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = stream_for(n);
    const std::size_t prefix = s.edges.size() - kTail;
    PipelineOptions options;
    for (auto _ : state) {
        state.PauseTiming();
        Pipeline pipe(build_graph(s, prefix), options);
        state.ResumeTiming();
        for (std::size_t j = prefix; j < s.edges.size(); ++j) {
            const auto& e = s.edges[j];
            benchmark::DoNotOptimize(pipe.step(e.u, e.v, e.w));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTail));
}
BENCHMARK(BM_PipelineStep)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
