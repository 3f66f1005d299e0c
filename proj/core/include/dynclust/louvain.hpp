#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dynclust/objectives.hpp"
#include "dynclust/partition.hpp"
#include "dynclust/random.hpp"

namespace dynclust {

struct SweepConfig {
    Objective objective = Objective::Modularity;
    double log_base = kDefaultLogBase;
    /// A move is applied only when its gain exceeds this threshold.
    double min_gain = 0.0;
    std::uint64_t seed = 0;
    /// Cap on full candidate sweeps per level.
    std::size_t max_sweeps = 100;
};

struct LevelResult {
    bool improved = false;
    std::size_t moves = 0;
    std::size_t sweeps = 0;
};

struct DendrogramLevel {
    /// Cluster of every node of this level's graph, compacted to [0, k).
    std::vector<ClusterId> assignment;
    /// Coarsened graph with one node per cluster; the next level's input.
    Graph induced;
    /// Number of nodes the local-move phase was allowed to visit.
    std::size_t candidates = 0;
    std::size_t sweeps = 0;
    std::size_t moves = 0;

    friend bool operator==(const DendrogramLevel &, const DendrogramLevel &) = default;
};

struct Dendrogram {
    std::vector<DendrogramLevel> levels;
    /// Composition of all levels on the original nodes, relabeled in first-seen order.
    std::vector<ClusterId> final_partition;

    std::size_t cluster_count() const;

    friend bool operator==(const Dendrogram &, const Dendrogram &) = default;
};

/**
 * Local-move phase over a fixed candidate set.
 *
 * Sweeps the candidates in a freshly shuffled order; each node is detached and
 * re-attached to the neighboring cluster with the largest gain, staying put unless
 * some target beats its own cluster by more than cfg.min_gain. Equal best targets
 * resolve to the lowest cluster id. Stops after a sweep without moves or after
 * cfg.max_sweeps sweeps.
 */
LevelResult one_level(Partition &p, std::span<const NodeId> candidates, const SweepConfig &cfg, Rng &rng);

/// Same, with a generator seeded from cfg.seed.
LevelResult one_level(Partition &p, std::span<const NodeId> candidates, const SweepConfig &cfg);

struct Coarsening {
    Graph graph;
    /// Supernode of every node of the input graph (= compacted cluster labels).
    std::vector<ClusterId> supernode;
};

/// Merges every cluster into one node; intra-cluster weight becomes a self-loop.
Coarsening induced_graph(const Partition &p);

/**
 * Multi-level Louvain starting from `initial_labels`. The first level only visits
 * `first_level_candidates`; every later level visits all nodes of its coarsened graph.
 * Levels continue while the coarsened graph is strictly smaller than its input.
 */
Dendrogram run_louvain(const Graph &g, std::span<const ClusterId> initial_labels,
                       std::span<const NodeId> first_level_candidates, const SweepConfig &cfg);

/// Louvain from the singleton partition with all nodes as candidates. Throws EmptyGraph.
Dendrogram run_static(const Graph &g, const SweepConfig &cfg);

/// Composition of the level assignments, relabeled to [0, k) in first-seen order.
std::vector<ClusterId> flatten(const Dendrogram &d);

/// Relabels arbitrary labels to [0, k) in first-seen order.
std::vector<ClusterId> relabel_first_seen(std::span<const ClusterId> labels);

std::vector<NodeId> all_nodes(std::size_t node_count);

} // namespace dynclust
