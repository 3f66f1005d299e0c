#include "dynclust/objectives.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dynclust/errors.hpp"

namespace dynclust {

std::string_view to_string(Objective objective) {
    switch (objective) {
    case Objective::Modularity:
        return "modularity";
    case Objective::Wlogv:
        return "wlogv";
    }
    return "?";
}

MoveContext make_move_context(const Partition &p, NodeId i, ClusterId target) {
    MoveContext ctx;
    ctx.node = i;
    ctx.source = p.cluster_of(i);
    ctx.target = target;
    ctx.strength = p.graph().strength(i);
    ctx.self_loop = p.graph().self_loop(i);
    ctx.weight_to_target = p.weight_to_cluster(i, target);
    ctx.weight_to_source = ctx.source == kUnassigned ? 0.0 : p.weight_to_cluster(i, ctx.source);
    return ctx;
}

namespace {

/// Stats of a plain label vector, independent of Partition bookkeeping.
std::vector<ClusterStats> stats_from_labels(const Graph &g, std::span<const ClusterId> labels) {
    if (labels.size() != g.node_count())
        throw InvalidParams("label count does not match node count");
    ClusterId max_label = 0;
    for (ClusterId c : labels)
        max_label = std::max(max_label, c);
    std::vector<ClusterStats> stats(labels.empty() ? 0 : static_cast<std::size_t>(max_label) + 1);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        ClusterStats &s = stats[labels[i]];
        s.sum_tot += g.strength(i);
        ++s.size;
        for (const Neighbor &n : g.neighbors(i))
            if (n.node >= i && labels[n.node] == labels[i])
                s.sum_in += n.weight;
    }
    return stats;
}

template <typename Stats>
double modularity_of(const Stats &stats, std::size_t count, double m) {
    if (m <= 0.0)
        return 0.0;
    double q = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
        const ClusterStats &s = stats(c);
        if (s.size == 0)
            continue;
        const double share = s.sum_tot / (2.0 * m);
        q += s.sum_in / m - share * share;
    }
    return q;
}

template <typename Stats>
double wlogv_of(const Stats &stats, std::size_t count, double m, double log_base) {
    if (m <= 0.0)
        throw EmptyGraph("wlogv is undefined on a graph without edges");
    const double total_volume = 2.0 * m;
    const double inv_log_base = 1.0 / std::log(log_base);
    double s_value = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
        const ClusterStats &s = stats(c);
        if (s.size == 0)
            continue;
        s_value += gain::wlogv_term(s.within_weight(), s.volume(), total_volume, inv_log_base);
    }
    return s_value;
}

} // namespace

double modularity(const Partition &p) {
    return modularity_of([&](std::size_t c) -> const ClusterStats & { return p.stats(static_cast<ClusterId>(c)); },
                         p.cluster_capacity(), p.graph().total_weight());
}

double modularity(const Graph &g, std::span<const ClusterId> labels) {
    auto stats = stats_from_labels(g, labels);
    return modularity_of([&](std::size_t c) -> const ClusterStats & { return stats[c]; }, stats.size(),
                         g.total_weight());
}

double wlogv(const Partition &p, double log_base) {
    return wlogv_of([&](std::size_t c) -> const ClusterStats & { return p.stats(static_cast<ClusterId>(c)); },
                    p.cluster_capacity(), p.graph().total_weight(), log_base);
}

double wlogv(const Graph &g, std::span<const ClusterId> labels, double log_base) {
    auto stats = stats_from_labels(g, labels);
    return wlogv_of([&](std::size_t c) -> const ClusterStats & { return stats[c]; }, stats.size(),
                    g.total_weight(), log_base);
}

double objective_value(const Partition &p, Objective objective, double log_base) {
    return objective == Objective::Modularity ? modularity(p) : wlogv(p, log_base);
}

double modularity_gain(const Partition &p, const MoveContext &ctx) {
    const double m = p.graph().total_weight();
    if (m <= 0.0)
        return 0.0;
    return gain::modularity_insertion(p.stats(ctx.target), ctx.strength, ctx.weight_to_target, m);
}

double wlogv_gain(const Partition &p, const MoveContext &ctx, double log_base) {
    const double m = p.graph().total_weight();
    if (m <= 0.0)
        return 0.0;
    return gain::wlogv_insertion(p.stats(ctx.target), ctx.strength, ctx.self_loop, ctx.weight_to_target, 2.0 * m,
                                 1.0 / std::log(log_base));
}

double move_delta(const Partition &p, const MoveContext &ctx, Objective objective, double log_base) {
    if (ctx.source == ctx.target || p.graph().total_weight() <= 0.0)
        return 0.0;
    ClusterStats source = p.stats(ctx.source);
    source.sum_in -= ctx.weight_to_source + ctx.self_loop;
    source.sum_tot -= ctx.strength;
    --source.size;
    const ClusterStats &target = p.stats(ctx.target);
    const double m = p.graph().total_weight();
    if (objective == Objective::Modularity) {
        return gain::modularity_insertion(target, ctx.strength, ctx.weight_to_target, m) -
               gain::modularity_insertion(source, ctx.strength, ctx.weight_to_source, m);
    }
    const double inv = 1.0 / std::log(log_base);
    return gain::wlogv_insertion(target, ctx.strength, ctx.self_loop, ctx.weight_to_target, 2.0 * m, inv) -
           gain::wlogv_insertion(source, ctx.strength, ctx.self_loop, ctx.weight_to_source, 2.0 * m, inv);
}

} // namespace dynclust
