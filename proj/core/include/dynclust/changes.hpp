#pragma once

#include <cstddef>
#include <vector>

#include "dynclust/graph.hpp"

namespace dynclust {

enum class ChangeKind { Add, Remove, Reweight };

struct EdgeChange {
    ChangeKind kind;
    NodeId u;
    NodeId v;
    double weight = 0.0; // ignored for Remove

    friend bool operator==(const EdgeChange &, const EdgeChange &) = default;
};

/// Edge events that turn the graph of step `step_index - 1` into step `step_index`.
struct ChangeSet {
    std::size_t step_index = 0;
    std::vector<EdgeChange> changes;

    bool empty() const noexcept { return changes.empty(); }
    friend bool operator==(const ChangeSet &, const ChangeSet &) = default;
};

/// Initial graph plus one ChangeSet per later time step.
struct DynamicGraph {
    Graph initial;
    std::vector<ChangeSet> steps;

    friend bool operator==(const DynamicGraph &, const DynamicGraph &) = default;
};

struct GraphDiff {
    std::vector<EdgeChange> adds;
    std::vector<EdgeChange> removes;
    std::vector<EdgeChange> reweights;

    std::size_t size() const noexcept { return adds.size() + removes.size() + reweights.size(); }
    bool empty() const noexcept { return size() == 0; }

    /// Removes, then reweights, then adds, in that order.
    ChangeSet to_change_set(std::size_t step_index = 0) const;
};

/**
 * Applies the changes in order and returns the resulting graph.
 *
 * Throws MissingEdge for a Remove/Reweight of an absent edge, DuplicateEdge for
 * an Add of a present edge, InvalidChange for a non-positive weight and
 * UnknownNode for ids outside the node range.
 */
Graph apply_changes(Graph g, const ChangeSet &cs);

/// In-place variant used by replay loops.
void apply_changes_in_place(Graph &g, const ChangeSet &cs);

/// Edge-level difference a -> b. Each list is sorted lexicographically with u <= v.
GraphDiff diff(const Graph &a, const Graph &b);

/// Graph at every time step: element 0 is the initial graph, element t follows step t.
std::vector<Graph> replay(const DynamicGraph &dg);

} // namespace dynclust
