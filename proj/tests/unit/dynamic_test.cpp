#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dynclust/dynamic.hpp"
#include "dynclust/errors.hpp"
#include "oracles.hpp"

namespace dynclust {
namespace {

using testing::delete_range_example;

const ChangeSet kAddSixEight{1, {{ChangeKind::Add, 6, 8, 1.0}}};

Graph example_before() {
    Graph g = delete_range_example();
    g.remove_edge(6, 8);
    return g;
}

TEST(DynamicTest, FrontierGrowsHopByHop) {
    const Graph g = delete_range_example();
    EXPECT_EQ(frontier(g, kAddSixEight, DeleteRange(0)), (std::vector<NodeId>{6, 8}));
    EXPECT_EQ(frontier(g, kAddSixEight, DeleteRange(1)), (std::vector<NodeId>{0, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(frontier(g, kAddSixEight, DeleteRange(2)), all_nodes(10));
    EXPECT_EQ(frontier(g, kAddSixEight, DeleteRange::unbounded()), all_nodes(10));
    EXPECT_TRUE(frontier(g, ChangeSet{}, DeleteRange(3)).empty());
}

TEST(DynamicTest, RemovedEdgeEndpointsAreStillSeeds) {
    Graph g = testing::unit_graph(4, {{0, 1}, {2, 3}});
    const ChangeSet cs{1, {{ChangeKind::Remove, 1, 2, 0.0}}};
    EXPECT_EQ(frontier(g, cs, DeleteRange(0)), (std::vector<NodeId>{1, 2}));
    EXPECT_EQ(frontier(g, cs, DeleteRange(1)), all_nodes(4));
}

TEST(DynamicTest, PropertyFrontierIsMonotoneInRange) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 5 + rng() % 50;
        const Graph g = testing::random_graph(rng, n, 0.05);
        ChangeSet cs{1, {}};
        for (int c = 0; c < 3; ++c) {
            const NodeId u = rng() % n, v = rng() % n;
            if (u != v && !g.has_edge(u, v))
                cs.changes.push_back({ChangeKind::Add, u, v, 1.0});
        }
        std::vector<NodeId> previous = change_endpoints(cs);
        for (std::size_t r = 0; r < 6; ++r) {
            const auto current = frontier(g, cs, DeleteRange(r));
            EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
            EXPECT_TRUE(std::is_sorted(current.begin(), current.end()));
            previous = current;
        }
    }
}

TEST(DynamicTest, ResetLabels) {
    const std::vector<ClusterId> previous{4, 4, 2, 2, 7};
    EXPECT_EQ(reset_labels(previous, {}), (std::vector<ClusterId>{0, 0, 1, 1, 2}));
    const std::vector<NodeId> some{1, 3};
    EXPECT_EQ(reset_labels(previous, some), (std::vector<ClusterId>{0, 3, 1, 4, 2}));
    const auto everything = all_nodes(5);
    EXPECT_EQ(reset_labels(previous, everything), (std::vector<ClusterId>{0, 1, 2, 3, 4}));
    const std::vector<NodeId> bad{9};
    EXPECT_THROW(reset_labels(previous, bad), UnknownNode);
}

TEST(DynamicTest, NoiseFilter) {
    // Sizes {5, 1, 3, 1}: the two singletons share one noise cluster.
    const std::vector<ClusterId> labels{0, 0, 1, 0, 2, 2, 0, 3, 2, 0};
    const auto filtered = noise_filter(labels, 2);
    EXPECT_EQ(filtered, (std::vector<ClusterId>{0, 0, 2, 0, 1, 1, 0, 2, 1, 0}));

    const std::vector<ClusterId> singletons{0, 1, 2, 3};
    EXPECT_EQ(noise_filter(singletons, 2), (std::vector<ClusterId>{0, 0, 0, 0}));

    const std::vector<ClusterId> sparse{5, 9, 5};
    EXPECT_EQ(noise_filter(sparse, 1), (std::vector<ClusterId>{0, 1, 0}));
    EXPECT_THROW(noise_filter(sparse, 0), InvalidParams);
}

TEST(DynamicTest, UnboundedRangeEqualsStaticRun) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 20 + rng() % 40;
        const Graph g = testing::random_graph(rng, n, 0.1);
        if (g.total_weight() == 0.0)
            continue;
        SweepConfig cfg;
        cfg.seed = rng();
        cfg.objective = trial % 2 ? Objective::Wlogv : Objective::Modularity;
        const auto previous = testing::random_labels(rng, n, 4);
        const ChangeSet cs{1, {}};
        const ReclusterResult r = recluster(g, cs, previous, DeleteRange::unbounded(), cfg);
        EXPECT_EQ(r.dendrogram, run_static(g, cfg));
        EXPECT_EQ(r.frontier_size, n);
    }
}

TEST(DynamicTest, EmptyChangeSetKeepsPartition) {
    const Graph g = delete_range_example();
    SweepConfig cfg;
    DynamicState state = initialize(g, cfg);
    const auto before = state.partition;
    const StepResult r = run_dynamic_step(state, ChangeSet{1, {}}, DeleteRange(2), cfg);
    EXPECT_EQ(r.metrics.frontier, 0u);
    EXPECT_TRUE(testing::same_clustering(state.partition, before));
    EXPECT_EQ(state.step, 1u);
    EXPECT_EQ(state.history.size(), 2u);
}

TEST(DynamicTest, ExampleStepRecoversTheTwoGroups) {
    SweepConfig cfg;
    StepResult first;
    DynamicState state = initialize(example_before(), cfg, kDefaultMinClusterSize, &first);
    EXPECT_EQ(first.metrics.frontier, 10u);
    const StepResult r = run_dynamic_step(state, kAddSixEight, DeleteRange(1), cfg);
    EXPECT_EQ(r.metrics.frontier, 7u);
    EXPECT_EQ(state.graph, delete_range_example());
    EXPECT_TRUE(testing::same_clustering(r.filtered, {0, 0, 0, 0, 0, 1, 1, 1, 1, 1}));
    EXPECT_NEAR(r.metrics.modularity, testing::brute_modularity(state.graph, r.filtered), 1e-12);
    EXPECT_NEAR(r.metrics.wlogv, testing::brute_wlogv(state.graph, r.filtered), 1e-12);
    EXPECT_EQ(r.metrics.clusters, 2u);
}

TEST(DynamicTest, PropertyNodesOutsideFrontierStayTogether) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 30 + rng() % 50;
        const Graph g = testing::random_graph(rng, n, 0.08);
        if (g.total_weight() == 0.0)
            continue;
        SweepConfig cfg;
        cfg.seed = rng();
        cfg.objective = trial % 2 ? Objective::Wlogv : Objective::Modularity;
        const auto previous = run_static(g, cfg).final_partition;

        ChangeSet cs{1, {}};
        const NodeId u = rng() % n, v = rng() % n;
        if (u == v || g.has_edge(u, v))
            continue;
        cs.changes.push_back({ChangeKind::Add, u, v, 1.0});
        const Graph after = apply_changes(g, cs);
        const DeleteRange range(rng() % 3);
        const auto reset = frontier(after, cs, range);
        const ReclusterResult r = recluster(after, cs, previous, range, cfg);
        EXPECT_EQ(r.dendrogram.levels.front().candidates, reset.size());

        std::set<NodeId> inside(reset.begin(), reset.end());
        const auto &labels = r.dendrogram.final_partition;
        for (NodeId a = 0; a < n; ++a) {
            for (NodeId b = a + 1; b < n; ++b) {
                if (inside.count(a) || inside.count(b) || previous[a] != previous[b])
                    continue;
                ASSERT_EQ(labels[a], labels[b]) << "nodes " << a << " and " << b << " split";
            }
        }
    }
}

TEST(DynamicTest, RawPartitionSeedsTheNextStep) {
    // A singleton that the noise filter merges must not be merged in the carried state.
    Graph g = testing::unit_graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    SweepConfig cfg;
    StepResult first;
    DynamicState state = initialize(g, cfg, 2, &first);
    EXPECT_EQ(first.filtered[6], 2u);
    EXPECT_EQ(state.partition, first.dendrogram.final_partition);
    EXPECT_EQ(state.partition.size(), 7u);
}

TEST(DynamicTest, DeleteRangeParsingAndOrdering) {
    EXPECT_EQ(DeleteRange::parse("3"), DeleteRange(3));
    EXPECT_EQ(DeleteRange::parse("inf"), DeleteRange::unbounded());
    EXPECT_EQ(DeleteRange::parse("unbounded"), DeleteRange::unbounded());
    EXPECT_THROW(DeleteRange::parse("-1"), InvalidParams);
    EXPECT_THROW(DeleteRange::parse("2x"), InvalidParams);
    EXPECT_THROW(DeleteRange::parse(""), InvalidParams);
    EXPECT_EQ(DeleteRange(4).to_string(), "4");
    EXPECT_EQ(DeleteRange::unbounded().to_string(), "inf");
    EXPECT_LT(DeleteRange(1), DeleteRange(2));
    EXPECT_LT(DeleteRange(100), DeleteRange::unbounded());
    EXPECT_FALSE(DeleteRange::unbounded() < DeleteRange::unbounded());
}

} // namespace
} // namespace dynclust
