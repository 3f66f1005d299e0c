#pragma once

#include <limits>
#include <span>
#include <vector>

#include "dynclust/graph.hpp"

namespace dynclust {

inline constexpr ClusterId kUnassigned = std::numeric_limits<ClusterId>::max();

/// Incremental per-cluster statistics.
struct ClusterStats {
    double sum_in = 0.0;  ///< intra-cluster edge weight, each edge and loop once
    double sum_tot = 0.0; ///< sum of member strengths
    std::size_t size = 0;

    /// w_c: intra weight over ordered pairs.
    double within_weight() const noexcept { return 2.0 * sum_in; }
    /// v_c: sum of member strengths.
    double volume() const noexcept { return sum_tot; }

    friend bool operator==(const ClusterStats &, const ClusterStats &) = default;
};

/**
 * Node -> cluster assignment over a graph, with per-cluster statistics kept up to
 * date by remove_node / insert_node.
 *
 * Cluster ids live in [0, node_count), which always leaves room for a singleton per
 * node. The partition refers to the graph it was built for; the graph must outlive it.
 */
class Partition {
public:
    /// Every node in its own cluster, node i in cluster i.
    explicit Partition(const Graph &g);

    /// Uses the given labels, compacted to [0, k) in first-seen order.
    Partition(const Graph &g, std::span<const ClusterId> labels);

    const Graph &graph() const noexcept { return *graph_; }
    std::size_t node_count() const noexcept { return assignment_.size(); }
    std::size_t cluster_capacity() const noexcept { return stats_.size(); }
    std::size_t cluster_count() const noexcept { return nonempty_; }

    ClusterId cluster_of(NodeId i) const;
    const ClusterStats &stats(ClusterId c) const;
    std::span<const ClusterId> assignment() const noexcept { return assignment_; }

    /// Sum of the weights of links from i to members of c other than i.
    double weight_to_cluster(NodeId i, ClusterId c) const;

    /// Detaches i from its cluster. `weight_to_source` is weight_to_cluster(i, source).
    void remove_node(NodeId i, double weight_to_source);
    void remove_node(NodeId i);

    /// Attaches an unassigned node. `weight_to_target` is weight_to_cluster(i, c).
    void insert_node(NodeId i, ClusterId c, double weight_to_target);
    void insert_node(NodeId i, ClusterId c);

    /// Labels relabeled to [0, k) in first-seen node order.
    std::vector<ClusterId> compact_labels() const;

    /// Statistics of c recomputed from the graph.
    ClusterStats recompute_stats(ClusterId c) const;

private:
    void check_node(NodeId i) const;
    void check_cluster(ClusterId c) const;
    void rebuild_stats();

    const Graph *graph_;
    std::vector<ClusterId> assignment_;
    std::vector<ClusterStats> stats_;
    std::size_t nonempty_ = 0;
};

} // namespace dynclust
