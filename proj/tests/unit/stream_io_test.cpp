#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "dynclust/errors.hpp"
#include "dynclust/generator.hpp"
#include "dynclust/stream_io.hpp"
#include "oracles.hpp"

namespace dynclust {
namespace {

DynamicGraph round_trip(const DynamicGraph &dg) {
    std::stringstream buffer;
    write_stream(buffer, dg);
    return read_stream(buffer);
}

DynamicGraph parse(const std::string &text) {
    std::istringstream in(text);
    return read_stream(in);
}

TEST(StreamIoTest, GeneratedStreamRoundTrips) {
    GeneratorConfig cfg;
    cfg.attachment = 2;
    cfg.graph_steps = {{6, 6, 6}, {9, 9}};
    cfg.intermediate_steps = 4;
    cfg.seed = 3;
    const GeneratedStream gs = generate_dyn_graph(cfg);
    EXPECT_EQ(round_trip(gs.stream), gs.stream);

    const auto path = std::filesystem::temp_directory_path() / "dynclust_stream_test.dg";
    save_stream(gs.stream, path);
    EXPECT_EQ(load_stream(path), gs.stream);
    std::filesystem::remove(path);
}

TEST(StreamIoTest, WeightsRoundTripExactly) {
    DynamicGraph dg{Graph(3), {}};
    dg.initial.add_edge(0, 1, 0.1);
    dg.initial.add_edge(2, 2, 1.0 / 3.0);
    dg.steps.push_back(ChangeSet{1, {{ChangeKind::Reweight, 0, 1, 2.5e-7}, {ChangeKind::Add, 1, 2, 1e300}}});
    EXPECT_EQ(round_trip(dg), dg);
}

TEST(StreamIoTest, ParsesCommentsAndAllRecordKinds) {
    const DynamicGraph dg = parse("# header comment\n"
                                  "DYNGRAPH 1\n"
                                  "N 4\n"
                                  "E 0 1 1\n"
                                  "\n"
                                  "E 1 2 2.5\n"
                                  "T 1\n"
                                  "+ 2 3 1\n"
                                  "# in between\n"
                                  "- 0 1\n"
                                  "~ 1 2 4\n"
                                  "T 2\n");
    EXPECT_EQ(dg.initial.node_count(), 4u);
    EXPECT_EQ(dg.initial.edge_count(), 2u);
    ASSERT_EQ(dg.steps.size(), 2u);
    EXPECT_EQ(dg.steps[0].changes.size(), 3u);
    EXPECT_TRUE(dg.steps[1].empty());
    const auto graphs = replay(dg);
    EXPECT_EQ(graphs.back().weight(1, 2), 4.0);
}

TEST(StreamIoTest, RemovalOfAbsentEdgeFailsOnReplay) {
    const DynamicGraph dg = parse("DYNGRAPH 1\nN 3\nE 0 1 1\nT 1\n- 1 2\n");
    EXPECT_THROW(replay(dg), MissingEdge);
}

TEST(StreamIoTest, MorphExampleReplaysToTarget) {
    std::ostringstream text;
    text << "DYNGRAPH 1\nN 10\n";
    for (const Edge &e : testing::morph_start().edges())
        text << "E " << e.u << ' ' << e.v << " 1\n";
    text << "T 1\n";
    for (auto [u, v] : testing::morph_deleted())
        text << "- " << u << ' ' << v << '\n';
    for (auto [u, v] : testing::morph_added())
        text << "+ " << u << ' ' << v << " 1\n";
    const DynamicGraph dg = parse(text.str());
    EXPECT_TRUE(diff(replay(dg).back(), testing::morph_target()).empty());
}

TEST(StreamIoTest, ErrorsCarryLineNumbers) {
    try {
        parse("DYNGRAPH 1\nN 3\nE 0 1 1\nE 0 x 1\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 4u);
    }
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\n"), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\nN 3\n+ 0 1 1\n"), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\nN 3\nE 0 5 1\n"), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\nN 3\nE 0 1 0\n"), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\nN 3\nE 0 1 1\nE 1 0 1\n"), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\nN 3\nT 1\n+ 0 1 1\n+ 0 1 1\n"), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\nN 3\nQ 1\n"), ParseError);
    EXPECT_THROW(parse("DYNGRAPH 1\r\nN 3\n"), ParseError);
}

TEST(StreamIoTest, RejectsOtherVersions) { EXPECT_THROW(parse("DYNGRAPH 2\nN 3\n"), VersionMismatch); }

TEST(StreamIoTest, GroundTruthRoundTrips) {
    const std::vector<GroundTruth> truth{{0, {0, 0, 1, 1}}, {5, {1, 0, 1, 0}}};
    std::stringstream buffer;
    write_ground_truth(buffer, truth);
    EXPECT_EQ(buffer.str().substr(0, 13), "GT 0\nC 0 0\nC ");
    EXPECT_EQ(read_ground_truth(buffer), truth);

    std::istringstream bad("C 0 1\n");
    EXPECT_THROW(read_ground_truth(bad), ParseError);
}

} // namespace
} // namespace dynclust
