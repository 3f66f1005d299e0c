#include "dynclust/dynamic.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>

#include "dynclust/errors.hpp"

namespace dynclust {

std::string DeleteRange::to_string() const {
    return is_unbounded() ? std::string("inf") : std::to_string(hops());
}

DeleteRange DeleteRange::parse(std::string_view text) {
    if (text == "inf" || text == "unbounded")
        return unbounded();
    std::size_t hops = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), hops);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidParams("bad delete range '" + std::string(text) + "'");
    return DeleteRange(hops);
}

std::vector<NodeId> change_endpoints(const ChangeSet &cs) {
    std::vector<NodeId> seeds;
    seeds.reserve(2 * cs.changes.size());
    for (const EdgeChange &c : cs.changes) {
        seeds.push_back(c.u);
        seeds.push_back(c.v);
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

std::vector<NodeId> frontier(const Graph &g_after, const ChangeSet &cs, DeleteRange range) {
    if (range.is_unbounded())
        return all_nodes(g_after.node_count());

    std::vector<NodeId> reached = change_endpoints(cs);
    for (NodeId s : reached)
        if (s >= g_after.node_count())
            throw UnknownNode("change endpoint " + std::to_string(s) + " is not a node");

    std::vector<bool> visited(g_after.node_count(), false);
    for (NodeId s : reached)
        visited[s] = true;

    // Level-synchronous BFS: [begin, end) of `reached` is the current ring.
    std::size_t begin = 0;
    for (std::size_t hop = 0; hop < range.hops() && begin < reached.size(); ++hop) {
        const std::size_t end = reached.size();
        for (std::size_t idx = begin; idx < end; ++idx) {
            for (const Neighbor &n : g_after.neighbors(reached[idx])) {
                if (!visited[n.node]) {
                    visited[n.node] = true;
                    reached.push_back(n.node);
                }
            }
        }
        begin = end;
    }
    std::sort(reached.begin(), reached.end());
    return reached;
}

std::vector<ClusterId> reset_labels(std::span<const ClusterId> previous, std::span<const NodeId> frontier) {
    std::vector<bool> reset(previous.size(), false);
    for (NodeId i : frontier) {
        if (i >= previous.size())
            throw UnknownNode("frontier node " + std::to_string(i) + " has no previous label");
        reset[i] = true;
    }

    std::vector<ClusterId> labels(previous.size());
    std::vector<ClusterId> remap;
    ClusterId next = 0;
    for (std::size_t i = 0; i < previous.size(); ++i) {
        if (reset[i])
            continue;
        const ClusterId c = previous[i];
        if (c >= remap.size())
            remap.resize(static_cast<std::size_t>(c) + 1, kUnassigned);
        if (remap[c] == kUnassigned)
            remap[c] = next++;
        labels[i] = remap[c];
    }
    for (NodeId i : frontier)
        labels[i] = next++;
    return labels;
}

Partition reset_partition(const Graph &g, std::span<const ClusterId> previous, std::span<const NodeId> frontier) {
    const auto labels = reset_labels(previous, frontier);
    return Partition(g, labels);
}

std::vector<ClusterId> noise_filter(std::span<const ClusterId> labels, std::size_t min_size) {
    if (min_size == 0)
        throw InvalidParams("min_size must be at least 1");
    std::vector<std::size_t> size;
    for (ClusterId c : labels) {
        if (c >= size.size())
            size.resize(static_cast<std::size_t>(c) + 1, 0);
        ++size[c];
    }
    std::vector<ClusterId> remap(size.size(), kUnassigned);
    std::vector<ClusterId> out(labels.size());
    std::vector<std::size_t> noise_nodes;
    ClusterId next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const ClusterId c = labels[i];
        if (size[c] < min_size) {
            noise_nodes.push_back(i);
            continue;
        }
        if (remap[c] == kUnassigned)
            remap[c] = next++;
        out[i] = remap[c];
    }
    for (std::size_t i : noise_nodes)
        out[i] = next;
    return out;
}

ReclusterResult recluster(const Graph &g_after, const ChangeSet &cs, std::span<const ClusterId> previous,
                          DeleteRange range, const SweepConfig &cfg) {
    if (previous.size() != g_after.node_count())
        throw InvalidParams("previous partition does not cover the graph");
    const auto nodes = frontier(g_after, cs, range);
    const auto labels = reset_labels(previous, nodes);
    return ReclusterResult{run_louvain(g_after, labels, nodes, cfg), nodes.size()};
}

StepMetrics evaluate(const Graph &g, std::span<const ClusterId> labels, double log_base) {
    StepMetrics m;
    m.modularity = modularity(g, labels);
    m.wlogv = g.total_weight() > 0.0 ? wlogv(g, labels, log_base) : 0.0;
    ClusterId max_label = 0;
    for (ClusterId c : labels)
        max_label = std::max(max_label, c);
    m.clusters = labels.empty() ? 0 : static_cast<std::size_t>(max_label) + 1;
    return m;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

StepResult finish_step(const Graph &g, Dendrogram d, double time_s, std::size_t step, std::size_t frontier_size,
                       const SweepConfig &cfg, std::size_t min_cluster_size) {
    StepResult r;
    r.filtered = noise_filter(d.final_partition, min_cluster_size);
    r.metrics = evaluate(g, r.filtered, cfg.log_base);
    r.metrics.step = step;
    r.metrics.time_s = time_s;
    r.metrics.frontier = frontier_size;
    r.dendrogram = std::move(d);
    return r;
}

} // namespace

DynamicState initialize(Graph initial, const SweepConfig &cfg, std::size_t min_cluster_size, StepResult *first) {
    DynamicState state;
    state.graph = std::move(initial);
    const auto start = Clock::now();
    Dendrogram d = run_static(state.graph, cfg);
    const double elapsed = seconds_since(start);
    StepResult r = finish_step(state.graph, std::move(d), elapsed, 0, state.graph.node_count(), cfg,
                               min_cluster_size);
    state.partition = r.dendrogram.final_partition;
    state.history.push_back(r.metrics);
    if (first)
        *first = std::move(r);
    return state;
}

StepResult run_dynamic_step(DynamicState &state, const ChangeSet &cs, DeleteRange range, const SweepConfig &cfg,
                            std::size_t min_cluster_size) {
    apply_changes_in_place(state.graph, cs);
    const auto start = Clock::now();
    ReclusterResult rc = recluster(state.graph, cs, state.partition, range, cfg);
    const double elapsed = seconds_since(start);

    ++state.step;
    StepResult r = finish_step(state.graph, std::move(rc.dendrogram), elapsed, state.step, rc.frontier_size, cfg,
                               min_cluster_size);
    state.partition = r.dendrogram.final_partition;
    state.history.push_back(r.metrics);
    return r;
}

} // namespace dynclust
