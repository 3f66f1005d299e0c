#include "dynclust/generator.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "dynclust/errors.hpp"

namespace dynclust {

Graph barabasi_albert(std::size_t n, std::size_t m, Rng &rng) {
    if (m < 1 || n <= m)
        throw InvalidParams("barabasi_albert needs n > m >= 1 (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                            ")");
    Graph g(n);
    // Every edge endpoint once: sampling from it is degree-proportional.
    std::vector<NodeId> urn;
    urn.reserve(2 * (n - m) * m);
    // Existing nodes without edges, each drawn with pseudo-count 1.
    std::vector<NodeId> isolated(m);
    std::iota(isolated.begin(), isolated.end(), NodeId{0});

    std::vector<NodeId> targets;
    for (NodeId t = static_cast<NodeId>(m); t < n; ++t) {
        targets.clear();
        while (targets.size() < m) {
            const std::size_t r = uniform_index(rng, urn.size() + isolated.size());
            const NodeId pick = r < urn.size() ? urn[r] : isolated[r - urn.size()];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end())
                targets.push_back(pick);
        }
        for (NodeId target : targets) {
            g.add_edge(target, t, 1.0);
            urn.push_back(target);
            urn.push_back(t);
        }
        std::erase_if(isolated, [&](NodeId v) { return g.degree(v) > 0; });
    }
    return g;
}

namespace {

std::discrete_distribution<std::size_t> degree_distribution(const Graph &g) {
    std::vector<double> weights(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i)
        weights[i] = static_cast<double>(std::max<std::size_t>(g.degree(i), 1));
    return std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
}

void append_shifted(std::vector<Edge> &out, const Graph &g, NodeId offset) {
    for (Edge e : g.edges()) {
        e.u += offset;
        e.v += offset;
        out.push_back(e);
    }
}

} // namespace

Graph minimal_merge(const Graph &g1, const Graph &g2, std::size_t k, Rng &rng) {
    const std::size_t n1 = g1.node_count();
    const std::size_t n2 = g2.node_count();
    if (k > n1 * n2)
        throw InvalidParams("cannot place " + std::to_string(k) + " inter edges between graphs of " +
                            std::to_string(n1) + " and " + std::to_string(n2) + " nodes");
    std::vector<Edge> edges;
    edges.reserve(g1.edge_count() + g2.edge_count() + k);
    append_shifted(edges, g1, 0);
    append_shifted(edges, g2, static_cast<NodeId>(n1));

    if (k > 0) {
        auto pick1 = degree_distribution(g1);
        auto pick2 = degree_distribution(g2);
        std::set<std::pair<NodeId, NodeId>> inter;
        while (inter.size() < k) {
            const auto u = static_cast<NodeId>(pick1(rng));
            const auto v = static_cast<NodeId>(n1 + pick2(rng));
            if (inter.emplace(u, v).second)
                edges.push_back(Edge{u, v, 1.0});
        }
    }
    return Graph::from_edges(n1 + n2, edges);
}

GeneratedGraph generate_graph(const GraphStepSpec &spec, std::size_t m, std::size_t k, Rng &rng) {
    if (spec.empty())
        throw InvalidParams("graph step needs at least one cluster");
    std::deque<GeneratedGraph> queue;
    for (std::size_t c = 0; c < spec.size(); ++c) {
        if (spec[c] < m + 1)
            throw InvalidParams("cluster size " + std::to_string(spec[c]) + " is below m + 1 = " +
                                std::to_string(m + 1));
        Graph g = barabasi_albert(spec[c], m, rng);
        std::vector<ClusterId> truth(spec[c], static_cast<ClusterId>(c));
        queue.push_back(GeneratedGraph{std::move(g), std::move(truth)});
    }
    while (queue.size() > 1) {
        GeneratedGraph first = std::move(queue.front());
        queue.pop_front();
        GeneratedGraph second = std::move(queue.front());
        queue.pop_front();
        GeneratedGraph merged{minimal_merge(first.graph, second.graph, k, rng), std::move(first.ground_truth)};
        merged.ground_truth.insert(merged.ground_truth.end(), second.ground_truth.begin(),
                                   second.ground_truth.end());
        queue.push_back(std::move(merged));
    }
    return std::move(queue.front());
}

std::vector<std::size_t> distribute_evenly(std::size_t total, std::size_t bins) {
    if (bins == 0)
        throw InvalidParams("distribute_evenly needs at least one bin");
    std::vector<std::size_t> counts(bins, total / bins);
    for (std::size_t i = 0; i < total % bins; ++i)
        ++counts[i];
    return counts;
}

namespace {

EdgeChange draw(std::vector<EdgeChange> &pool, Rng &rng) {
    const std::size_t idx = uniform_index(rng, pool.size());
    std::swap(pool[idx], pool.back());
    EdgeChange c = pool.back();
    pool.pop_back();
    return c;
}

} // namespace

GeneratedStream generate_dyn_graph(const GeneratorConfig &cfg, Rng &rng) {
    if (cfg.graph_steps.size() < 2)
        throw InvalidParams("a dynamic graph needs at least two graph steps");
    if (cfg.attachment < 1)
        throw InvalidParams("attachment must be at least 1");
    if (cfg.intermediate_steps < 1 && cfg.changes_per_step == 0)
        throw InvalidParams("intermediate_steps must be at least 1");
    if (!cfg.step_seeds.empty() && cfg.step_seeds.size() != cfg.graph_steps.size())
        throw InvalidParams("step_seeds must list one seed per graph step");
    const std::size_t k = cfg.inter_edges.value_or(cfg.attachment);
    if (k < 1)
        throw InvalidParams("inter_edges must be at least 1");
    const std::size_t nodes = std::accumulate(cfg.graph_steps.front().begin(), cfg.graph_steps.front().end(),
                                              std::size_t{0});
    for (const GraphStepSpec &spec : cfg.graph_steps)
        if (std::accumulate(spec.begin(), spec.end(), std::size_t{0}) != nodes)
            throw InvalidParams("all graph steps must have the same total node count");

    auto build = [&](std::size_t i) {
        Rng step_rng(cfg.step_seeds.empty() ? derive_seed(cfg.seed, i) : cfg.step_seeds[i]);
        return generate_graph(cfg.graph_steps[i], cfg.attachment, k, step_rng);
    };

    GeneratedStream out;
    GeneratedGraph first = build(0);
    out.stream.initial = first.graph;
    out.ground_truth.push_back(GroundTruth{0, std::move(first.ground_truth)});
    out.predefined.push_back(std::move(first.graph));

    Graph current = out.stream.initial;
    std::size_t step = 0;
    for (std::size_t i = 1; i < cfg.graph_steps.size(); ++i) {
        GeneratedGraph next = build(i);
        GraphDiff d = diff(current, next.graph);
        const std::size_t total = d.size();
        const std::size_t bins =
            cfg.changes_per_step > 0 ? std::max<std::size_t>(1, (total + cfg.changes_per_step - 1) / cfg.changes_per_step)
                                     : cfg.intermediate_steps;
        std::vector<EdgeChange> adds = std::move(d.adds);
        std::vector<EdgeChange> removes = std::move(d.removes);
        // Reweights never occur with unit weights; fold them into the first bin if they do.
        std::vector<EdgeChange> reweights = std::move(d.reweights);

        for (std::size_t count : distribute_evenly(adds.size() + removes.size(), bins)) {
            ChangeSet cs{++step, {}};
            cs.changes = std::move(reweights);
            reweights.clear();
            for (std::size_t c = 0; c < count; ++c) {
                const bool add = removes.empty() || (!adds.empty() && uniform_index(rng, 2) == 0);
                cs.changes.push_back(draw(add ? adds : removes, rng));
            }
            apply_changes_in_place(current, cs);
            out.stream.steps.push_back(std::move(cs));
        }
        if (!(current == next.graph))
            throw std::logic_error("interpolation did not reach the target graph step");
        out.ground_truth.push_back(GroundTruth{step, std::move(next.ground_truth)});
        out.predefined.push_back(std::move(next.graph));
    }
    return out;
}

GeneratedStream generate_dyn_graph(const GeneratorConfig &cfg) {
    Rng rng(derive_seed(cfg.seed, 0xfeedULL));
    return generate_dyn_graph(cfg, rng);
}

GraphStepSpec random_cluster_sizes(std::size_t nodes, std::size_t min_clusters, std::size_t max_clusters, Rng &rng) {
    if (min_clusters < 1 || min_clusters > max_clusters)
        throw InvalidParams("need 1 <= clusters_min <= clusters_max");
    if (max_clusters > nodes)
        throw InvalidParams("more clusters than nodes");
    const std::size_t count = min_clusters + uniform_index(rng, max_clusters - min_clusters + 1);
    return distribute_evenly(nodes, count);
}

ScenarioParams low_churn_scenario() { return ScenarioParams{}; }

ScenarioParams high_churn_scenario() {
    ScenarioParams p;
    p.changes_per_step = 100;
    return p;
}

GeneratedStream generate_scenario(const ScenarioParams &params) {
    Rng rng(params.seed);
    GeneratorConfig cfg;
    cfg.attachment = params.attachment;
    cfg.intermediate_steps = params.intermediate_steps;
    cfg.changes_per_step = params.changes_per_step;
    cfg.seed = derive_seed(params.seed, 1);
    for (std::size_t i = 0; i < params.graph_steps; ++i)
        cfg.graph_steps.push_back(random_cluster_sizes(params.nodes, params.clusters_min, params.clusters_max, rng));
    GeneratedStream gs = generate_dyn_graph(cfg, rng);
    if (params.max_steps > 0)
        truncate(gs, params.max_steps);
    return gs;
}

void truncate(GeneratedStream &gs, std::size_t steps) {
    if (gs.stream.steps.size() <= steps)
        return;
    gs.stream.steps.resize(steps);
    std::size_t keep = 0;
    while (keep < gs.ground_truth.size() && gs.ground_truth[keep].step_index <= steps)
        ++keep;
    gs.ground_truth.resize(keep);
    gs.predefined.resize(keep);
}

} // namespace dynclust
