#include "dynclust/partition.hpp"

#include <algorithm>
#include <string>

#include "dynclust/errors.hpp"

namespace dynclust {

Partition::Partition(const Graph &g)
    : graph_(&g), assignment_(g.node_count()), stats_(g.node_count()) {
    for (NodeId i = 0; i < g.node_count(); ++i)
        assignment_[i] = i;
    rebuild_stats();
}

Partition::Partition(const Graph &g, std::span<const ClusterId> labels)
    : graph_(&g), assignment_(g.node_count()), stats_(g.node_count()) {
    if (labels.size() != g.node_count())
        throw InvalidParams("label count " + std::to_string(labels.size()) + " does not match node count " +
                            std::to_string(g.node_count()));
    std::vector<ClusterId> remap;
    ClusterId next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const ClusterId label = labels[i];
        if (label == kUnassigned)
            throw UnknownCluster("node " + std::to_string(i) + " has no cluster");
        if (label >= remap.size())
            remap.resize(static_cast<std::size_t>(label) + 1, kUnassigned);
        if (remap[label] == kUnassigned)
            remap[label] = next++;
        assignment_[i] = remap[label];
    }
    rebuild_stats();
}

void Partition::rebuild_stats() {
    std::fill(stats_.begin(), stats_.end(), ClusterStats{});
    const Graph &g = *graph_;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        ClusterStats &s = stats_[assignment_[i]];
        s.sum_tot += g.strength(i);
        ++s.size;
        for (const Neighbor &n : g.neighbors(i)) {
            // Each undirected edge once: from its lower endpoint; loops from themselves.
            if (n.node >= i && assignment_[n.node] == assignment_[i])
                s.sum_in += n.weight;
        }
    }
    nonempty_ = 0;
    for (const ClusterStats &s : stats_)
        nonempty_ += s.size > 0;
}

void Partition::check_node(NodeId i) const {
    if (i >= assignment_.size())
        throw UnknownNode("unknown node " + std::to_string(i));
}

void Partition::check_cluster(ClusterId c) const {
    if (c >= stats_.size())
        throw UnknownCluster("unknown cluster " + std::to_string(c));
}

ClusterId Partition::cluster_of(NodeId i) const {
    check_node(i);
    return assignment_[i];
}

const ClusterStats &Partition::stats(ClusterId c) const {
    check_cluster(c);
    return stats_[c];
}

double Partition::weight_to_cluster(NodeId i, ClusterId c) const {
    check_node(i);
    double w = 0.0;
    for (const Neighbor &n : graph_->neighbors(i))
        if (n.node != i && assignment_[n.node] == c)
            w += n.weight;
    return w;
}

void Partition::remove_node(NodeId i, double weight_to_source) {
    check_node(i);
    const ClusterId c = assignment_[i];
    if (c == kUnassigned)
        throw UnknownCluster("node " + std::to_string(i) + " is not assigned");
    ClusterStats &s = stats_[c];
    s.sum_in -= weight_to_source + graph_->self_loop(i);
    s.sum_tot -= graph_->strength(i);
    if (--s.size == 0)
        --nonempty_;
    assignment_[i] = kUnassigned;
}

void Partition::remove_node(NodeId i) { remove_node(i, weight_to_cluster(i, cluster_of(i))); }

void Partition::insert_node(NodeId i, ClusterId c, double weight_to_target) {
    check_node(i);
    check_cluster(c);
    if (assignment_[i] != kUnassigned)
        throw InvalidParams("node " + std::to_string(i) + " is already assigned");
    ClusterStats &s = stats_[c];
    s.sum_in += weight_to_target + graph_->self_loop(i);
    s.sum_tot += graph_->strength(i);
    if (s.size++ == 0)
        ++nonempty_;
    assignment_[i] = c;
}

void Partition::insert_node(NodeId i, ClusterId c) {
    check_cluster(c);
    insert_node(i, c, weight_to_cluster(i, c));
}

std::vector<ClusterId> Partition::compact_labels() const {
    std::vector<ClusterId> remap(stats_.size(), kUnassigned);
    std::vector<ClusterId> out(assignment_.size());
    ClusterId next = 0;
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        const ClusterId c = assignment_[i];
        if (c == kUnassigned) {
            out[i] = kUnassigned;
            continue;
        }
        if (remap[c] == kUnassigned)
            remap[c] = next++;
        out[i] = remap[c];
    }
    return out;
}

ClusterStats Partition::recompute_stats(ClusterId c) const {
    check_cluster(c);
    ClusterStats s;
    const Graph &g = *graph_;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (assignment_[i] != c)
            continue;
        s.sum_tot += g.strength(i);
        ++s.size;
        for (const Neighbor &n : g.neighbors(i))
            if (n.node >= i && assignment_[n.node] == c)
                s.sum_in += n.weight;
    }
    return s;
}

} // namespace dynclust
