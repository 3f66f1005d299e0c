#include "dynclust/louvain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dynclust/errors.hpp"

namespace dynclust {

namespace {

struct ModularityGain {
    double total_weight;

    double operator()(const ClusterStats &target, double strength, double /*loop*/, double weight_in) const {
        return gain::modularity_insertion(target, strength, weight_in, total_weight);
    }
};

struct WlogvGain {
    double total_volume;
    double inv_log_base;

    double operator()(const ClusterStats &target, double strength, double loop, double weight_in) const {
        return gain::wlogv_insertion(target, strength, loop, weight_in, total_volume, inv_log_base);
    }
};

template <typename Gain>
LevelResult sweep_until_stable(Partition &p, std::span<const NodeId> candidates, const SweepConfig &cfg, Rng &rng,
                               const Gain &gain_of) {
    const Graph &g = p.graph();
    const auto assignment = p.assignment();
    std::vector<double> weight_to(p.cluster_capacity(), 0.0);
    std::vector<ClusterId> touched;
    std::vector<NodeId> order(candidates.begin(), candidates.end());

    LevelResult result;
    while (result.sweeps < cfg.max_sweeps && !order.empty()) {
        shuffle_in_place(std::span<NodeId>(order), rng);
        ++result.sweeps;
        std::size_t moved = 0;

        for (const NodeId i : order) {
            const ClusterId source = assignment[i];
            const double strength = g.strength(i);
            const double loop = g.self_loop(i);

            touched.clear();
            for (const Neighbor &n : g.neighbors(i)) {
                if (n.node == i)
                    continue;
                const ClusterId c = assignment[n.node];
                if (weight_to[c] == 0.0)
                    touched.push_back(c);
                weight_to[c] += n.weight;
            }

            const double weight_to_source = weight_to[source];
            p.remove_node(i, weight_to_source);

            const double stay_gain = gain_of(p.stats(source), strength, loop, weight_to_source);
            ClusterId best = source;
            double best_gain = stay_gain;
            for (const ClusterId c : touched) {
                if (c == source)
                    continue;
                const double candidate_gain = gain_of(p.stats(c), strength, loop, weight_to[c]);
                if (candidate_gain > best_gain || (candidate_gain == best_gain && best != source && c < best)) {
                    best = c;
                    best_gain = candidate_gain;
                }
            }

            if (best != source && best_gain - stay_gain > cfg.min_gain) {
                p.insert_node(i, best, weight_to[best]);
                ++moved;
            } else {
                p.insert_node(i, source, weight_to_source);
            }

            for (const ClusterId c : touched)
                weight_to[c] = 0.0;
        }

        result.moves += moved;
        if (moved == 0)
            break;
    }
    result.improved = result.moves > 0;
    return result;
}

} // namespace

std::size_t Dendrogram::cluster_count() const {
    if (final_partition.empty())
        return 0;
    return static_cast<std::size_t>(*std::max_element(final_partition.begin(), final_partition.end())) + 1;
}

LevelResult one_level(Partition &p, std::span<const NodeId> candidates, const SweepConfig &cfg, Rng &rng) {
    const double m = p.graph().total_weight();
    if (cfg.min_gain < 0.0)
        throw InvalidConfig("min_gain must be non-negative");
    if (m <= 0.0)
        return {};
    for (NodeId i : candidates)
        if (i >= p.node_count())
            throw UnknownNode("candidate " + std::to_string(i) + " is not a node");
    if (cfg.objective == Objective::Modularity)
        return sweep_until_stable(p, candidates, cfg, rng, ModularityGain{m});
    return sweep_until_stable(p, candidates, cfg, rng, WlogvGain{2.0 * m, 1.0 / std::log(cfg.log_base)});
}

LevelResult one_level(Partition &p, std::span<const NodeId> candidates, const SweepConfig &cfg) {
    Rng rng(cfg.seed);
    return one_level(p, candidates, cfg, rng);
}

Coarsening induced_graph(const Partition &p) {
    const Graph &g = p.graph();
    Coarsening out;
    out.supernode = p.compact_labels();
    const std::size_t n = g.node_count();
    std::size_t k = 0;
    for (ClusterId c : out.supernode)
        k = std::max<std::size_t>(k, static_cast<std::size_t>(c) + 1);

    // Bucket the nodes by supernode (counting sort).
    std::vector<std::size_t> offset(k + 1, 0);
    for (ClusterId c : out.supernode)
        ++offset[c + 1];
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    std::vector<NodeId> members(n);
    {
        std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
        for (NodeId i = 0; i < n; ++i)
            members[cursor[out.supernode[i]]++] = i;
    }

    std::vector<std::vector<Neighbor>> adjacency(k);
    std::vector<double> weight(k, 0.0);
    std::vector<ClusterId> touched;
    for (ClusterId c = 0; c < k; ++c) {
        touched.clear();
        for (std::size_t idx = offset[c]; idx < offset[c + 1]; ++idx) {
            const NodeId i = members[idx];
            for (const Neighbor &nb : g.neighbors(i)) {
                const ClusterId d = out.supernode[nb.node];
                // Intra edges are seen from both endpoints; loops only once.
                const double w = (d == c && nb.node != i) ? 0.5 * nb.weight : nb.weight;
                if (weight[d] == 0.0)
                    touched.push_back(d);
                weight[d] += w;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto &list = adjacency[c];
        list.reserve(touched.size());
        for (ClusterId d : touched) {
            list.push_back(Neighbor{d, weight[d]});
            weight[d] = 0.0;
        }
    }
    out.graph = Graph::from_adjacency(std::move(adjacency));
    return out;
}

std::vector<NodeId> all_nodes(std::size_t node_count) {
    std::vector<NodeId> nodes(node_count);
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    return nodes;
}

Dendrogram run_louvain(const Graph &g, std::span<const ClusterId> initial_labels,
                       std::span<const NodeId> first_level_candidates, const SweepConfig &cfg) {
    if (g.node_count() == 0)
        throw EmptyGraph("cannot cluster a graph without nodes");
    Rng rng(cfg.seed);
    Dendrogram d;

    Graph level_graph;
    const Graph *current = &g;
    Partition p(g, initial_labels);
    std::vector<NodeId> candidates(first_level_candidates.begin(), first_level_candidates.end());

    while (true) {
        const LevelResult level = one_level(p, candidates, cfg, rng);
        Coarsening coarse = induced_graph(p);
        const bool shrank = coarse.graph.node_count() < current->node_count();
        d.levels.push_back(DendrogramLevel{std::move(coarse.supernode), coarse.graph, candidates.size(),
                                           level.sweeps, level.moves});
        if (!shrank)
            break;
        level_graph = std::move(coarse.graph);
        current = &level_graph;
        p = Partition(level_graph);
        candidates = all_nodes(level_graph.node_count());
    }
    d.final_partition = flatten(d);
    return d;
}

Dendrogram run_static(const Graph &g, const SweepConfig &cfg) {
    const auto nodes = all_nodes(g.node_count());
    return run_louvain(g, nodes, nodes, cfg);
}

std::vector<ClusterId> relabel_first_seen(std::span<const ClusterId> labels) {
    std::vector<ClusterId> remap;
    std::vector<ClusterId> out(labels.size());
    ClusterId next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const ClusterId c = labels[i];
        if (c >= remap.size())
            remap.resize(static_cast<std::size_t>(c) + 1, kUnassigned);
        if (remap[c] == kUnassigned)
            remap[c] = next++;
        out[i] = remap[c];
    }
    return out;
}

std::vector<ClusterId> flatten(const Dendrogram &d) {
    if (d.levels.empty())
        return {};
    std::vector<ClusterId> labels = d.levels.front().assignment;
    for (std::size_t l = 1; l < d.levels.size(); ++l) {
        const auto &next = d.levels[l].assignment;
        for (ClusterId &c : labels)
            c = next[c];
    }
    return relabel_first_seen(labels);
}

} // namespace dynclust
