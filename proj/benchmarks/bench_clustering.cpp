#include <benchmark/benchmark.h>

#include "dynclust/dynclust.hpp"

using namespace dynclust;

namespace {

// Preset stream shared by all benchmarks; built once.
const GeneratedStream &preset() {
    static const GeneratedStream gs = generate_scenario(ScenarioParams{});
    return gs;
}

Objective objective_arg(const benchmark::State &state) {
    return state.range(0) == 0 ? Objective::Modularity : Objective::Wlogv;
}

DeleteRange range_arg(std::int64_t r) { return r < 0 ? DeleteRange::unbounded() : DeleteRange(r); }

} // namespace

static void BM_RunStatic(benchmark::State &state) {
    const Graph &g = preset().stream.initial;
    SweepConfig cfg;
    cfg.objective = objective_arg(state);
    for (auto _ : state) {
        Dendrogram d = run_static(g, cfg);
        benchmark::DoNotOptimize(d);
    }
    state.counters["nodes"] = static_cast<double>(g.node_count());
}
BENCHMARK(BM_RunStatic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_InducedGraph(benchmark::State &state) {
    const Graph &g = preset().stream.initial;
    const auto labels = run_static(g, SweepConfig{}).levels.front().assignment;
    const Partition p(g, labels);
    for (auto _ : state) {
        Coarsening c = induced_graph(p);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_InducedGraph)->Unit(benchmark::kMicrosecond);

// One recluster call after the first change set, per (objective, delete range); -1 is unbounded.
static void BM_DynamicStep(benchmark::State &state) {
    const GeneratedStream &gs = preset();
    SweepConfig cfg;
    cfg.objective = objective_arg(state);
    const auto previous = run_static(gs.stream.initial, cfg).final_partition;
    const ChangeSet &cs = gs.stream.steps.front();
    const Graph after = apply_changes(gs.stream.initial, cs);
    const DeleteRange range = range_arg(state.range(1));
    std::size_t frontier_size = 0;
    for (auto _ : state) {
        ReclusterResult r = recluster(after, cs, previous, range, cfg);
        frontier_size = r.frontier_size;
        benchmark::DoNotOptimize(r);
    }
    state.counters["frontier"] = static_cast<double>(frontier_size);
}
BENCHMARK(BM_DynamicStep)
    ->ArgsProduct({{0, 1}, {0, 1, 2, 3, -1}})
    ->ArgNames({"wlogv", "range"})
    ->Unit(benchmark::kMillisecond);

// Whole-stream tracking with a small versus a larger delete range. Counters log the
// mean quality relative to static runs; low ranges can stay stuck in a local optimum.
static void BM_RangeEscape(benchmark::State &state) {
    ScenarioParams params;
    params.nodes = 600;
    params.clusters_min = 6;
    params.clusters_max = 10;
    params.max_steps = 0;
    const GeneratedStream gs = generate_scenario(params);
    ExperimentConfig cfg;
    cfg.algorithms = {Algorithm::Louvain, Algorithm::LouvainDyn, Algorithm::Infomap, Algorithm::InfomapDyn};
    cfg.delete_ranges = {range_arg(state.range(0))};
    cfg.warmup = false;
    std::vector<SummaryRow> rows;
    for (auto _ : state)
        rows = summarize(run_experiment(gs.stream, cfg));
    for (const SummaryRow &r : rows) {
        if (r.algorithm == Algorithm::LouvainDyn)
            state.counters["louvain_q_pct"] = r.modularity_pct;
        if (r.algorithm == Algorithm::InfomapDyn)
            state.counters["infomap_s_pct"] = r.wlogv_pct;
    }
    state.counters["steps"] = static_cast<double>(gs.stream.steps.size());
}
BENCHMARK(BM_RangeEscape)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_GenerateScenario(benchmark::State &state) {
    ScenarioParams params;
    params.nodes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        GeneratedStream gs = generate_scenario(params);
        benchmark::DoNotOptimize(gs);
    }
}
BENCHMARK(BM_GenerateScenario)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
