#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dynclust {

using NodeId = std::uint32_t;
using ClusterId = std::uint32_t;

struct Neighbor {
    NodeId node;
    double weight;

    friend bool operator==(const Neighbor &, const Neighbor &) = default;
};

/// Undirected edge with canonical orientation u <= v.
struct Edge {
    NodeId u;
    NodeId v;
    double weight;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * Weighted undirected graph over the dense node ids [0, node_count).
 *
 * Every node keeps its neighbor list sorted by id. A self-loop (i, i) is stored
 * once in i's list; it contributes its weight once to total_weight() and twice
 * to strength(i), so the strengths always sum to 2 * total_weight().
 * Zero-weight edges are never stored.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t node_count);

    /// Builds a graph from an edge list. Throws DuplicateEdge on repeated pairs.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

    /// Adopts neighbor lists that are already sorted, symmetric and free of zero weights.
    static Graph from_adjacency(std::vector<std::vector<Neighbor>> adjacency);

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// m: sum of edge weights, each undirected edge and each loop counted once.
    double total_weight() const noexcept { return total_weight_; }

    /// Weighted degree; the loop weight is counted twice. Throws UnknownNode.
    double strength(NodeId i) const;
    double self_loop(NodeId i) const;

    std::span<const Neighbor> neighbors(NodeId i) const;
    std::size_t degree(NodeId i) const { return neighbors(i).size(); }

    bool has_edge(NodeId u, NodeId v) const;
    std::optional<double> weight(NodeId u, NodeId v) const;

    void add_edge(NodeId u, NodeId v, double w);
    void remove_edge(NodeId u, NodeId v);
    void set_weight(NodeId u, NodeId v, double w);

    /// Adds w to edge (u, v), creating it when absent. Used to build coarsened graphs.
    void accumulate_edge(NodeId u, NodeId v, double w);

    /// All edges in lexicographic (u, v) order with u <= v.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &a, const Graph &b);

private:
    void check_node(NodeId i) const;
    void insert_half(NodeId from, NodeId to, double w);
    void erase_half(NodeId from, NodeId to);

    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> strength_;
    std::vector<double> loop_;
    std::size_t edge_count_ = 0;
    double total_weight_ = 0.0;
};

} // namespace dynclust
