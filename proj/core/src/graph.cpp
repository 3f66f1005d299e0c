#include "dynclust/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dynclust/changes.hpp"
#include "dynclust/errors.hpp"

namespace dynclust {

namespace {

std::string edge_name(NodeId u, NodeId v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

auto find_neighbor(const std::vector<Neighbor> &list, NodeId target) {
    return std::lower_bound(list.begin(), list.end(), target,
                            [](const Neighbor &n, NodeId id) { return n.node < id; });
}

auto find_neighbor(std::vector<Neighbor> &list, NodeId target) {
    return std::lower_bound(list.begin(), list.end(), target,
                            [](const Neighbor &n, NodeId id) { return n.node < id; });
}

} // namespace

Graph::Graph(std::size_t node_count)
    : adjacency_(node_count), strength_(node_count, 0.0), loop_(node_count, 0.0) {}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
    Graph g(node_count);
    for (const Edge &e : edges)
        g.add_edge(e.u, e.v, e.weight);
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Neighbor>> adjacency) {
    Graph g;
    g.adjacency_ = std::move(adjacency);
    const std::size_t n = g.adjacency_.size();
    g.strength_.assign(n, 0.0);
    g.loop_.assign(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        for (const Neighbor &nb : g.adjacency_[u]) {
            g.strength_[u] += nb.weight;
            if (nb.node == u) {
                g.loop_[u] = nb.weight;
                g.strength_[u] += nb.weight;
            }
            if (u <= nb.node) {
                ++g.edge_count_;
                g.total_weight_ += nb.weight;
            }
        }
    }
    return g;
}

void Graph::check_node(NodeId i) const {
    if (i >= adjacency_.size())
        throw UnknownNode("unknown node " + std::to_string(i));
}

double Graph::strength(NodeId i) const {
    check_node(i);
    return strength_[i];
}

double Graph::self_loop(NodeId i) const {
    check_node(i);
    return loop_[i];
}

std::span<const Neighbor> Graph::neighbors(NodeId i) const {
    check_node(i);
    return adjacency_[i];
}

bool Graph::has_edge(NodeId u, NodeId v) const { return weight(u, v).has_value(); }

std::optional<double> Graph::weight(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto &list = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const NodeId other = &list == &adjacency_[u] ? v : u;
    auto it = find_neighbor(list, other);
    if (it == list.end() || it->node != other)
        return std::nullopt;
    return it->weight;
}

void Graph::insert_half(NodeId from, NodeId to, double w) {
    auto &list = adjacency_[from];
    list.insert(find_neighbor(list, to), Neighbor{to, w});
}

void Graph::erase_half(NodeId from, NodeId to) {
    auto &list = adjacency_[from];
    list.erase(find_neighbor(list, to));
}

void Graph::add_edge(NodeId u, NodeId v, double w) {
    check_node(u);
    check_node(v);
    if (!(w > 0.0))
        throw InvalidChange("edge " + edge_name(u, v) + " needs a positive weight");
    if (has_edge(u, v))
        throw DuplicateEdge("edge " + edge_name(u, v) + " already present");
    insert_half(u, v, w);
    if (u == v) {
        loop_[u] = w;
        strength_[u] += 2.0 * w;
    } else {
        insert_half(v, u, w);
        strength_[u] += w;
        strength_[v] += w;
    }
    ++edge_count_;
    total_weight_ += w;
}

void Graph::remove_edge(NodeId u, NodeId v) {
    auto w = weight(u, v);
    if (!w)
        throw MissingEdge("edge " + edge_name(u, v) + " not present");
    erase_half(u, v);
    if (u == v) {
        loop_[u] = 0.0;
        strength_[u] -= 2.0 * *w;
    } else {
        erase_half(v, u);
        strength_[u] -= *w;
        strength_[v] -= *w;
    }
    --edge_count_;
    total_weight_ -= *w;
}

void Graph::set_weight(NodeId u, NodeId v, double w) {
    if (!(w > 0.0))
        throw InvalidChange("edge " + edge_name(u, v) + " needs a positive weight");
    auto old = weight(u, v);
    if (!old)
        throw MissingEdge("edge " + edge_name(u, v) + " not present");
    const double delta = w - *old;
    find_neighbor(adjacency_[u], v)->weight = w;
    if (u == v) {
        loop_[u] = w;
        strength_[u] += 2.0 * delta;
    } else {
        find_neighbor(adjacency_[v], u)->weight = w;
        strength_[u] += delta;
        strength_[v] += delta;
    }
    total_weight_ += delta;
}

void Graph::accumulate_edge(NodeId u, NodeId v, double w) {
    if (auto old = weight(u, v))
        set_weight(u, v, *old + w);
    else
        add_edge(u, v, w);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (const Neighbor &n : adjacency_[u])
            if (u <= n.node)
                out.push_back(Edge{u, n.node, n.weight});
    return out;
}

bool operator==(const Graph &a, const Graph &b) {
    return a.adjacency_ == b.adjacency_;
}

// ---------------------------------------------------------------------------

ChangeSet GraphDiff::to_change_set(std::size_t step_index) const {
    ChangeSet cs{step_index, {}};
    cs.changes.reserve(size());
    cs.changes.insert(cs.changes.end(), removes.begin(), removes.end());
    cs.changes.insert(cs.changes.end(), reweights.begin(), reweights.end());
    cs.changes.insert(cs.changes.end(), adds.begin(), adds.end());
    return cs;
}

void apply_changes_in_place(Graph &g, const ChangeSet &cs) {
    for (const EdgeChange &c : cs.changes) {
        switch (c.kind) {
        case ChangeKind::Add:
            g.add_edge(c.u, c.v, c.weight);
            break;
        case ChangeKind::Remove:
            g.remove_edge(c.u, c.v);
            break;
        case ChangeKind::Reweight:
            g.set_weight(c.u, c.v, c.weight);
            break;
        }
    }
}

Graph apply_changes(Graph g, const ChangeSet &cs) {
    apply_changes_in_place(g, cs);
    return g;
}

GraphDiff diff(const Graph &a, const Graph &b) {
    GraphDiff d;
    const std::size_t n = std::max(a.node_count(), b.node_count());
    static const std::vector<Neighbor> none;
    for (NodeId u = 0; u < n; ++u) {
        std::span<const Neighbor> la = u < a.node_count() ? a.neighbors(u) : std::span<const Neighbor>(none);
        std::span<const Neighbor> lb = u < b.node_count() ? b.neighbors(u) : std::span<const Neighbor>(none);
        // Merge the two sorted lists, keeping only the canonical half (u <= v).
        auto ia = std::lower_bound(la.begin(), la.end(), u,
                                   [](const Neighbor &x, NodeId id) { return x.node < id; });
        auto ib = std::lower_bound(lb.begin(), lb.end(), u,
                                   [](const Neighbor &x, NodeId id) { return x.node < id; });
        while (ia != la.end() || ib != lb.end()) {
            if (ib == lb.end() || (ia != la.end() && ia->node < ib->node)) {
                d.removes.push_back({ChangeKind::Remove, u, ia->node, 0.0});
                ++ia;
            } else if (ia == la.end() || ib->node < ia->node) {
                d.adds.push_back({ChangeKind::Add, u, ib->node, ib->weight});
                ++ib;
            } else {
                if (ia->weight != ib->weight)
                    d.reweights.push_back({ChangeKind::Reweight, u, ib->node, ib->weight});
                ++ia;
                ++ib;
            }
        }
    }
    return d;
}

std::vector<Graph> replay(const DynamicGraph &dg) {
    std::vector<Graph> out;
    out.reserve(dg.steps.size() + 1);
    out.push_back(dg.initial);
    for (const ChangeSet &cs : dg.steps)
        out.push_back(apply_changes(out.back(), cs));
    return out;
}

} // namespace dynclust
