#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynclust/changes.hpp"
#include "dynclust/louvain.hpp"

namespace dynclust {

/// Hop distance from a changed edge within which nodes are reset; may be unbounded.
class DeleteRange {
public:
    constexpr explicit DeleteRange(std::size_t hops) : hops_(hops) {}
    static constexpr DeleteRange unbounded() { return DeleteRange(); }

    constexpr bool is_unbounded() const noexcept { return !hops_.has_value(); }
    /// Hop count; only meaningful when bounded.
    constexpr std::size_t hops() const noexcept { return hops_.value_or(0); }

    /// "inf" or the decimal hop count.
    std::string to_string() const;
    /// Accepts "inf" (also "unbounded") or a non-negative integer. Throws InvalidParams.
    static DeleteRange parse(std::string_view text);

    friend constexpr bool operator==(const DeleteRange &, const DeleteRange &) = default;
    /// Bounded ranges ascend by hops; unbounded sorts last.
    friend constexpr bool operator<(const DeleteRange &a, const DeleteRange &b) {
        if (a.is_unbounded())
            return false;
        return b.is_unbounded() || a.hops() < b.hops();
    }

private:
    constexpr DeleteRange() = default;
    std::optional<std::size_t> hops_;
};

/// Sorted endpoints of every changed edge.
std::vector<NodeId> change_endpoints(const ChangeSet &cs);

/**
 * Nodes within `range` hops of a changed edge, measured by BFS on the post-change
 * graph. Endpoints of removed edges are seeds even though the edge is gone.
 * Returns a sorted list; an unbounded range yields every node.
 */
std::vector<NodeId> frontier(const Graph &g_after, const ChangeSet &cs, DeleteRange range);

/// Keeps previous labels outside the frontier; each frontier node gets a fresh singleton label.
std::vector<ClusterId> reset_labels(std::span<const ClusterId> previous, std::span<const NodeId> frontier);

/// reset_labels, with cluster statistics built over `g`.
Partition reset_partition(const Graph &g, std::span<const ClusterId> previous, std::span<const NodeId> frontier);

/**
 * Moves the members of every cluster smaller than `min_size` into one noise cluster.
 * Surviving clusters are relabeled in first-seen order; the noise cluster, when
 * present, takes the next id. Throws InvalidParams when min_size is 0.
 */
std::vector<ClusterId> noise_filter(std::span<const ClusterId> labels, std::size_t min_size);

inline constexpr std::size_t kDefaultMinClusterSize = 2;

struct ReclusterResult {
    Dendrogram dendrogram;
    std::size_t frontier_size = 0;
};

/**
 * Core of a dynamic step on an already updated graph: computes the frontier, resets
 * it to singletons inside the previous partition and runs Louvain with the first
 * level restricted to the frontier.
 */
ReclusterResult recluster(const Graph &g_after, const ChangeSet &cs, std::span<const ClusterId> previous,
                          DeleteRange range, const SweepConfig &cfg);

struct StepMetrics {
    std::size_t step = 0;
    double time_s = 0.0;
    double modularity = 0.0;
    double wlogv = 0.0;
    std::size_t clusters = 0;
    std::size_t frontier = 0;
};

struct DynamicState {
    Graph graph;
    /// Flattened partition of the last step before noise filtering; seeds the next step.
    std::vector<ClusterId> partition;
    std::size_t step = 0;
    std::vector<StepMetrics> history;
};

struct StepResult {
    Dendrogram dendrogram;
    /// Noise-filtered partition the metrics were computed on.
    std::vector<ClusterId> filtered;
    StepMetrics metrics;
};

/// Quality of a partition: modularity and wlogv (wlogv is 0 on edgeless graphs).
StepMetrics evaluate(const Graph &g, std::span<const ClusterId> labels, double log_base = kDefaultLogBase);

/// Clusters the initial graph statically and wraps it in a state.
DynamicState initialize(Graph initial, const SweepConfig &cfg, std::size_t min_cluster_size = kDefaultMinClusterSize,
                        StepResult *first = nullptr);

/// Applies `cs` to the state's graph, reclusters and advances the state.
StepResult run_dynamic_step(DynamicState &state, const ChangeSet &cs, DeleteRange range, const SweepConfig &cfg,
                            std::size_t min_cluster_size = kDefaultMinClusterSize);

} // namespace dynclust
