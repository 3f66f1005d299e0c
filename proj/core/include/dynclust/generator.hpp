#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynclust/changes.hpp"
#include "dynclust/random.hpp"
#include "dynclust/stream_io.hpp"

namespace dynclust {

/// Cluster sizes of one predefined graph step.
using GraphStepSpec = std::vector<std::size_t>;

struct GeneratorConfig {
    /// Barabasi-Albert attachment count m.
    std::size_t attachment = 2;
    std::vector<GraphStepSpec> graph_steps;
    /// Intermediate time steps between consecutive predefined steps.
    std::size_t intermediate_steps = 1;
    /// When non-zero, each transition gets ceil(changes / changes_per_step) intermediate
    /// steps instead of `intermediate_steps`.
    std::size_t changes_per_step = 0;
    /// Inter-graph edges per merge; defaults to `attachment`.
    std::optional<std::size_t> inter_edges;
    std::uint64_t seed = 0;
    /// Optional explicit seed per predefined step; otherwise derived from `seed`.
    std::vector<std::uint64_t> step_seeds;
};

/**
 * Preferential attachment graph on n nodes: m isolated seed nodes, then every new
 * node links to m distinct existing nodes picked proportionally to their degree
 * (degree-0 nodes weigh 1). Produces exactly (n - m) * m unit-weight edges.
 * Throws InvalidParams unless n > m >= 1.
 */
Graph barabasi_albert(std::size_t n, std::size_t m, Rng &rng);

/**
 * Disjoint union of g1 and g2 (g2's ids shifted by |V(g1)|) plus k distinct edges
 * between them. Each endpoint is chosen degree-proportionally within its own graph.
 * Throws InvalidParams when k exceeds |V1| * |V2|.
 */
Graph minimal_merge(const Graph &g1, const Graph &g2, std::size_t k, Rng &rng);

struct GeneratedGraph {
    Graph graph;
    /// Index (into the spec) of the cluster graph each node came from.
    std::vector<ClusterId> ground_truth;
};

/// One BA graph per cluster size, merged pairwise through a FIFO queue until one remains.
GeneratedGraph generate_graph(const GraphStepSpec &spec, std::size_t m, std::size_t k, Rng &rng);

/// `bins` counts summing to `total`, differing by at most one, larger counts first.
std::vector<std::size_t> distribute_evenly(std::size_t total, std::size_t bins);

struct GeneratedStream {
    DynamicGraph stream;
    /// Labels of every predefined step, keyed by its time step index.
    std::vector<GroundTruth> ground_truth;
    /// The predefined graphs themselves, in order.
    std::vector<Graph> predefined;
};

/**
 * Builds every predefined step and interpolates between consecutive ones: the edge
 * difference is spread evenly over the intermediate steps, each change drawn by
 * picking add or remove uniformly among the non-empty pools and then a uniform
 * member. After a transition's last intermediate step the graph equals the target.
 */
GeneratedStream generate_dyn_graph(const GeneratorConfig &cfg, Rng &rng);
GeneratedStream generate_dyn_graph(const GeneratorConfig &cfg);

/// Uniform cluster count in [min_clusters, max_clusters], nodes split as evenly as possible.
GraphStepSpec random_cluster_sizes(std::size_t nodes, std::size_t min_clusters, std::size_t max_clusters, Rng &rng);

/// Parameters of a ready-made scenario such as the 3000-node benchmark preset.
struct ScenarioParams {
    std::size_t nodes = 3000;
    std::size_t clusters_min = 20;
    std::size_t clusters_max = 30;
    std::size_t attachment = 2;
    std::size_t graph_steps = 2;
    std::size_t intermediate_steps = 0;
    std::size_t changes_per_step = 10;
    /// Number of change steps kept; 0 keeps all.
    std::size_t max_steps = 200;
    std::uint64_t seed = 1;
};

/// The defaults above: 10 changes per step, first 200 steps.
ScenarioParams low_churn_scenario();
/// Same graphs with 100 changes per step.
ScenarioParams high_churn_scenario();

GeneratedStream generate_scenario(const ScenarioParams &params);

/// Keeps the first `steps` change sets and the ground truth of steps that survive.
void truncate(GeneratedStream &gs, std::size_t steps);

} // namespace dynclust
