#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "dynclust/errors.hpp"
#include "dynclust/objectives.hpp"
#include "oracles.hpp"

namespace dynclust {
namespace {

using testing::brute_modularity;
using testing::brute_wlogv;
using testing::unit_graph;

Graph two_triangles() { return unit_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }
Graph triangle() { return unit_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(ObjectivesTest, SingleClusterScoresZero) {
    const Graph g = two_triangles();
    std::vector<ClusterId> one(6, 0);
    // Connected variant for the modularity identity.
    Graph connected = g;
    connected.add_edge(2, 3, 1.0);
    EXPECT_NEAR(modularity(Partition(connected, one)), 0.0, 1e-15);
    EXPECT_NEAR(wlogv(Partition(g, one)), 0.0, 1e-15);
}

TEST(ObjectivesTest, TwoTrianglesAsTwoClusters) {
    const Graph g = two_triangles();
    const std::vector<ClusterId> labels{0, 0, 0, 1, 1, 1};
    const Partition p(g, labels);
    EXPECT_NEAR(modularity(p), 0.5, 1e-15);
    EXPECT_NEAR(wlogv(p), std::log10(2.0), 1e-15);
    EXPECT_NEAR(brute_modularity(g, labels), 0.5, 1e-15);
    EXPECT_NEAR(brute_wlogv(g, labels), std::log10(2.0), 1e-15);
}

TEST(ObjectivesTest, LogBaseIsConfigurable) {
    const Graph g = two_triangles();
    const std::vector<ClusterId> labels{0, 0, 0, 1, 1, 1};
    EXPECT_NEAR(wlogv(g, labels, 2.0), 1.0, 1e-15);
    EXPECT_NEAR(wlogv(g, labels, std::exp(1.0)), std::log(2.0), 1e-15);
}

TEST(ObjectivesTest, EdgelessGraphConventions) {
    const Graph g(4);
    const Partition p(g);
    EXPECT_EQ(modularity(p), 0.0);
    EXPECT_THROW(wlogv(p), EmptyGraph);
}

TEST(ObjectivesTest, ModularityGainOnTriangle) {
    const Graph g = triangle();
    Partition p(g, std::vector<ClusterId>{0, 0, 1});
    p.remove_node(2);
    const MoveContext ctx = make_move_context(p, 2, 0);
    EXPECT_DOUBLE_EQ(ctx.weight_to_target, 2.0);
    EXPECT_NEAR(modularity_gain(p, ctx), 2.0 / 9.0, 1e-15);
    // Before: {0,1},{2} = -2/9; after: one cluster = 0.
    EXPECT_NEAR(brute_modularity(g, {0, 0, 0}) - brute_modularity(g, {0, 0, 1}), 2.0 / 9.0, 1e-15);
}

TEST(ObjectivesTest, ReinsertingIntoOwnSingletonGainsNothing) {
    Graph g = triangle();
    g.add_edge(1, 1, 2.0);
    Partition p(g);
    p.remove_node(1);
    const MoveContext ctx = make_move_context(p, 1, 1);
    EXPECT_EQ(modularity_gain(p, ctx), 0.0);
    EXPECT_EQ(wlogv_gain(p, ctx), 0.0);
}

TEST(ObjectivesTest, SplittingTrianglesRaisesWlogvByLogTwo) {
    const Graph g = two_triangles();
    Partition p(g, std::vector<ClusterId>{0, 0, 0, 0, 0, 0});
    const double before = wlogv(p);
    for (NodeId i : {3, 4, 5}) {
        p.remove_node(i);
        p.insert_node(i, 1);
    }
    EXPECT_NEAR(wlogv(p) - before, std::log10(2.0), 1e-15);
}

TEST(ObjectivesTest, InsertNodeUpdatesTriangleStats) {
    const Graph g = triangle();
    Partition p(g, std::vector<ClusterId>{0, 0, 1});
    EXPECT_DOUBLE_EQ(p.stats(0).sum_in, 1.0);
    EXPECT_DOUBLE_EQ(p.stats(0).sum_tot, 4.0);
    p.remove_node(2);
    p.insert_node(2, 0);
    EXPECT_DOUBLE_EQ(p.stats(0).sum_in, 3.0);
    EXPECT_DOUBLE_EQ(p.stats(0).sum_tot, 6.0);
    EXPECT_EQ(p.stats(0).size, 3u);
    EXPECT_EQ(p.cluster_count(), 1u);
    EXPECT_DOUBLE_EQ(p.stats(0).within_weight(), 6.0);
    EXPECT_DOUBLE_EQ(p.stats(0).volume(), 6.0);
}

TEST(ObjectivesTest, RemovingLoopedNodeDropsLoopWeight) {
    Graph g = triangle();
    g.add_edge(0, 0, 2.0);
    Partition p(g, std::vector<ClusterId>{0, 0, 0});
    const ClusterStats before = p.stats(0);
    const double k_in = p.weight_to_cluster(0, 0);
    EXPECT_DOUBLE_EQ(k_in, 2.0);
    p.remove_node(0);
    EXPECT_DOUBLE_EQ(before.sum_in - p.stats(0).sum_in, k_in + 2.0);
    EXPECT_DOUBLE_EQ(before.sum_tot - p.stats(0).sum_tot, g.strength(0));
    EXPECT_EQ(p.stats(0), p.recompute_stats(0));
}

TEST(ObjectivesTest, RemoveThenReinsertIsBitwiseIdentity) {
    const Graph g = two_triangles();
    Partition p(g, std::vector<ClusterId>{0, 0, 1, 1, 1, 0});
    const ClusterStats s0 = p.stats(0), s1 = p.stats(1);
    p.remove_node(2);
    p.insert_node(2, 1);
    EXPECT_EQ(p.stats(0), s0);
    EXPECT_EQ(p.stats(1), s1);
}

TEST(ObjectivesTest, BookkeepingErrors) {
    const Graph g = triangle();
    Partition p(g);
    EXPECT_THROW(p.remove_node(7), UnknownNode);
    EXPECT_THROW(p.insert_node(0, 1), InvalidParams);
    p.remove_node(0);
    EXPECT_THROW(p.remove_node(0), UnknownCluster);
    EXPECT_THROW(p.insert_node(0, 3), UnknownCluster);
    EXPECT_THROW(Partition(g, std::vector<ClusterId>{0, 1}), InvalidParams);
}

// Full-recompute oracle for both gains: every move is checked against the brute
// force objective difference of the labelings before and after.
TEST(ObjectivesTest, PropertyGainsMatchRecomputation) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 2 + rng() % 15;
        const Graph g = testing::random_graph(rng, n, 0.35, trial % 3 == 0, 1 + trial % 4);
        if (g.total_weight() == 0.0)
            continue;
        auto labels = testing::random_labels(rng, n, 1 + rng() % n);
        Partition p(g, labels);
        labels.assign(p.assignment().begin(), p.assignment().end());

        const NodeId i = static_cast<NodeId>(rng() % n);
        const ClusterId target = static_cast<ClusterId>(rng() % n);
        MoveContext ctx = make_move_context(p, i, target);

        auto moved = labels;
        moved[i] = target;
        EXPECT_NEAR(move_delta(p, ctx, Objective::Modularity),
                    brute_modularity(g, moved) - brute_modularity(g, labels), 1e-9);
        EXPECT_NEAR(move_delta(p, ctx, Objective::Wlogv), brute_wlogv(g, moved) - brute_wlogv(g, labels), 1e-9);

        // Insertion gains relative to the detached node sitting in its own fresh cluster.
        const ClusterId fresh = static_cast<ClusterId>(n); // outside every existing label
        auto isolated = labels;
        isolated[i] = fresh;
        p.remove_node(i);
        ctx = make_move_context(p, i, target);
        EXPECT_NEAR(modularity_gain(p, ctx), brute_modularity(g, moved) - brute_modularity(g, isolated), 1e-9);
        EXPECT_NEAR(wlogv_gain(p, ctx), brute_wlogv(g, moved) - brute_wlogv(g, isolated), 1e-9);
    }
}

TEST(ObjectivesTest, PropertyStatsStayConsistent) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 5 + rng() % 40;
        const Graph g = testing::random_graph(rng, n, 0.2, true, 5);
        Partition p(g, testing::random_labels(rng, n, 1 + rng() % 6));
        for (int step = 0; step < 500; ++step) {
            const NodeId i = static_cast<NodeId>(rng() % n);
            p.remove_node(i);
            p.insert_node(i, static_cast<ClusterId>(rng() % n));
        }
        std::size_t nodes = 0;
        double volume = 0.0;
        for (ClusterId c = 0; c < p.cluster_capacity(); ++c) {
            const ClusterStats expected = p.recompute_stats(c);
            EXPECT_NEAR(p.stats(c).sum_in, expected.sum_in, 1e-12);
            EXPECT_NEAR(p.stats(c).sum_tot, expected.sum_tot, 1e-12);
            EXPECT_EQ(p.stats(c).size, expected.size);
            nodes += p.stats(c).size;
            volume += p.stats(c).sum_tot;
        }
        EXPECT_EQ(nodes, n);
        EXPECT_NEAR(volume, 2.0 * g.total_weight(), 1e-9);
    }
}

TEST(ObjectivesTest, PropertyBoundsAndRelabelInvariance) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + rng() % 30;
        const Graph g = testing::random_graph(rng, n, 0.25, trial % 2 == 0, 3);
        if (g.total_weight() == 0.0)
            continue;
        const std::size_t k = 1 + rng() % n;
        auto labels = testing::random_labels(rng, n, k);
        const double q = modularity(g, labels);
        const double s = wlogv(g, labels);
        EXPECT_GE(q, -1.0);
        EXPECT_LE(q, 1.0);
        EXPECT_GE(s, 0.0);

        std::vector<ClusterId> perm(k);
        std::iota(perm.begin(), perm.end(), ClusterId{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto &l : labels)
            l = perm[l];
        EXPECT_NEAR(modularity(g, labels), q, 1e-12);
        EXPECT_NEAR(wlogv(g, labels), s, 1e-12);
    }
}

} // namespace
} // namespace dynclust
