// dynclust: generate dynamic graph streams, cluster them and compare algorithms.
//
//   dynclust generate -o stream.dg
//   dynclust cluster  --input stream.dg --algorithm louvain-dyn --delete-range 1 -o steps.csv
//   dynclust bench    --input stream.dg --delete-ranges 0,1,2,3 --reps 3 -o bench.csv --summary
//
// Exit codes: 0 ok, 1 usage error, 2 bad input data, 3 anything else.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "dynclust/dynclust.hpp"

namespace {

using namespace dynclust;

struct GenerateArgs {
    std::string preset = "low-churn";
    ScenarioParams params;
    std::string out;
};

struct ClusterArgs {
    std::string input;
    std::string algorithm = "louvain-dyn";
    std::string delete_range = "1";
    std::size_t min_cluster_size = kDefaultMinClusterSize;
    std::uint64_t seed = 0;
    std::size_t reps = 1;
    std::string out;
};

struct BenchArgs {
    std::string input;
    std::vector<std::string> algorithms{"louvain", "louvain-dyn", "infomap", "infomap-dyn"};
    std::vector<std::string> delete_ranges{"0", "1", "2", "3"};
    std::size_t min_cluster_size = kDefaultMinClusterSize;
    std::uint64_t seed = 0;
    std::size_t reps = 3;
    std::string out;
    bool no_warmup = false;
    bool summary = false;
};

void emit_csv(const std::vector<StepRecord> &records, const std::string &out) {
    if (out.empty() || out == "-")
        write_csv(std::cout, records);
    else
        write_csv(records, out);
}

// Starts from the named preset and overlays the options given on the command line.
ScenarioParams resolve(const GenerateArgs &a, const CLI::App &cmd) {
    ScenarioParams p = a.preset == "high-churn" ? high_churn_scenario() : low_churn_scenario();
    auto given = [&](const char *name) { return cmd.count(name) > 0; };
    if (given("--nodes"))
        p.nodes = a.params.nodes;
    if (given("--clusters-min"))
        p.clusters_min = a.params.clusters_min;
    if (given("--clusters-max"))
        p.clusters_max = a.params.clusters_max;
    if (given("--m"))
        p.attachment = a.params.attachment;
    if (given("--graph-steps"))
        p.graph_steps = a.params.graph_steps;
    if (given("--intermediate"))
        p.intermediate_steps = a.params.intermediate_steps;
    if (given("--changes-per-step"))
        p.changes_per_step = a.params.changes_per_step;
    if (given("--steps"))
        p.max_steps = a.params.max_steps;
    if (given("--seed"))
        p.seed = a.params.seed;
    return p;
}

int do_generate(const GenerateArgs &a, const CLI::App &cmd) {
    GeneratedStream gs = generate_scenario(resolve(a, cmd));
    save_stream(gs.stream, a.out);
    save_ground_truth(gs.ground_truth, a.out + ".gt");
    std::fprintf(stderr, "wrote %s: %zu nodes, %zu edges, %zu steps\n", a.out.c_str(),
                 gs.stream.initial.node_count(), gs.stream.initial.edge_count(), gs.stream.steps.size());
    return 0;
}

int do_cluster(const ClusterArgs &a) {
    ExperimentConfig cfg;
    cfg.algorithms = {parse_algorithm(a.algorithm)};
    cfg.delete_ranges = {DeleteRange::parse(a.delete_range)};
    cfg.min_cluster_size = a.min_cluster_size;
    cfg.seed = a.seed;
    cfg.repetitions = a.reps;
    cfg.warmup = false;
    const DynamicGraph stream = load_stream(a.input);
    emit_csv(run_experiment(stream, cfg), a.out);
    return 0;
}

int do_bench(const BenchArgs &a) {
    ExperimentConfig cfg;
    cfg.algorithms.clear();
    for (const std::string &name : a.algorithms)
        cfg.algorithms.push_back(parse_algorithm(name));
    cfg.delete_ranges.clear();
    for (const std::string &r : a.delete_ranges)
        cfg.delete_ranges.push_back(DeleteRange::parse(r));
    cfg.min_cluster_size = a.min_cluster_size;
    cfg.seed = a.seed;
    cfg.repetitions = a.reps;
    cfg.warmup = !a.no_warmup;
    const DynamicGraph stream = load_stream(a.input);
    const auto records = run_experiment(stream, cfg);
    emit_csv(records, a.out);
    if (a.summary) {
        const bool csv_on_stdout = a.out.empty() || a.out == "-";
        std::fputs(format_summary(summarize(records)).c_str(), csv_on_stdout ? stderr : stdout);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Dynamic graph clustering with delete-range Louvain"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Generate a clustered dynamic graph stream");
    generate->add_option("--preset", gen.preset, "low-churn (10 changes per step) or high-churn (100)")
        ->capture_default_str()
        ->check(CLI::IsMember({"low-churn", "high-churn"}));
    generate->add_option("--nodes", gen.params.nodes, "Nodes per graph step")->capture_default_str();
    generate->add_option("--clusters-min", gen.params.clusters_min)->capture_default_str();
    generate->add_option("--clusters-max", gen.params.clusters_max)->capture_default_str();
    generate->add_option("--m", gen.params.attachment, "Preferential attachment edges per node")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate->add_option("--graph-steps", gen.params.graph_steps, "Predefined graph steps")->capture_default_str();
    generate->add_option("--intermediate", gen.params.intermediate_steps,
                         "Intermediate steps per transition (used when --changes-per-step is 0)")
        ->capture_default_str();
    generate->add_option("--changes-per-step", gen.params.changes_per_step)->capture_default_str();
    generate->add_option("--steps", gen.params.max_steps, "Keep at most this many change steps (0 keeps all)")
        ->capture_default_str();
    generate->add_option("--seed", gen.params.seed)->capture_default_str();
    generate->add_option("-o,--output", gen.out, "Stream file; ground truth goes to <output>.gt")->required();

    ClusterArgs cl;
    auto *cluster = app.add_subcommand("cluster", "Cluster every step of a stream with one algorithm");
    cluster->add_option("-i,--input", cl.input)->required()->check(CLI::ExistingFile);
    cluster->add_option("-a,--algorithm", cl.algorithm, "louvain, louvain-dyn, infomap or infomap-dyn")
        ->capture_default_str();
    cluster->add_option("-r,--delete-range", cl.delete_range, "Hop count or inf")->capture_default_str();
    cluster->add_option("--min-cluster-size", cl.min_cluster_size)->capture_default_str()->check(CLI::PositiveNumber);
    cluster->add_option("--seed", cl.seed)->capture_default_str();
    cluster->add_option("--reps", cl.reps)->capture_default_str()->check(CLI::PositiveNumber);
    cluster->add_option("-o,--output", cl.out, "CSV file (stdout when omitted)");

    BenchArgs bn;
    auto *bench = app.add_subcommand("bench", "Compare algorithms and delete ranges on a stream");
    bench->add_option("-i,--input", bn.input)->required()->check(CLI::ExistingFile);
    bench->add_option("--algorithms", bn.algorithms)->delimiter(',')->capture_default_str();
    bench->add_option("--delete-ranges", bn.delete_ranges)->delimiter(',')->capture_default_str();
    bench->add_option("--min-cluster-size", bn.min_cluster_size)->capture_default_str()->check(CLI::PositiveNumber);
    bench->add_option("--seed", bn.seed)->capture_default_str();
    bench->add_option("--reps", bn.reps)->capture_default_str()->check(CLI::PositiveNumber);
    bench->add_flag("--summary", bn.summary, "Print per algorithm and range means relative to static");
    bench->add_flag("--no-warmup", bn.no_warmup, "Skip the untimed warm-up run");
    bench->add_option("-o,--output", bn.out, "CSV file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*generate)
            return do_generate(gen, *generate);
        if (*cluster)
            return do_cluster(cl);
        return do_bench(bn);
    } catch (const InvalidConfig &e) {
        std::fprintf(stderr, "dynclust: %s\n", e.what());
        return 1;
    } catch (const InvalidParams &e) {
        std::fprintf(stderr, "dynclust: %s\n", e.what());
        return 1;
    } catch (const Error &e) {
        std::fprintf(stderr, "dynclust: %s\n", e.what());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "dynclust: internal error: %s\n", e.what());
        return 3;
    }
}
