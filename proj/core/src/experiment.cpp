#include "dynclust/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "dynclust/errors.hpp"
#include "dynclust/stream_io.hpp"

namespace dynclust {

std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::Louvain:
        return "louvain";
    case Algorithm::LouvainDyn:
        return "louvain-dyn";
    case Algorithm::Infomap:
        return "infomap";
    case Algorithm::InfomapDyn:
        return "infomap-dyn";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm a : {Algorithm::Louvain, Algorithm::LouvainDyn, Algorithm::Infomap, Algorithm::InfomapDyn})
        if (to_string(a) == name)
            return a;
    throw InvalidConfig("unknown algorithm '" + std::string(name) + "'");
}

bool is_dynamic(Algorithm a) { return a == Algorithm::LouvainDyn || a == Algorithm::InfomapDyn; }

Objective objective_of(Algorithm a) {
    return (a == Algorithm::Louvain || a == Algorithm::LouvainDyn) ? Objective::Modularity : Objective::Wlogv;
}

Algorithm baseline_of(Algorithm a) {
    switch (a) {
    case Algorithm::LouvainDyn:
        return Algorithm::Louvain;
    case Algorithm::InfomapDyn:
        return Algorithm::Infomap;
    default:
        return a;
    }
}

SweepConfig sweep_config_for(const ExperimentConfig &cfg, Algorithm a, std::size_t step) {
    SweepConfig sweep;
    sweep.objective = objective_of(a);
    sweep.log_base = cfg.log_base;
    sweep.min_gain = cfg.min_gain;
    sweep.max_sweeps = cfg.max_sweeps;
    sweep.seed = derive_seed(cfg.seed, step);
    return sweep;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
    double mean_time_s = 0.0;
    Dendrogram dendrogram;
    std::size_t frontier = 0;
};

/// Runs `fn` (returning ReclusterResult) repetitions times, plus an optional discarded warm-up.
template <typename Fn>
Timed measure(const ExperimentConfig &cfg, Fn &&fn) {
    Timed out;
    bool have_result = false;
    double total = 0.0;
    const std::size_t runs = cfg.repetitions + (cfg.warmup ? 1 : 0);
    for (std::size_t run = 0; run < runs; ++run) {
        const auto start = Clock::now();
        ReclusterResult r = fn();
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (cfg.warmup && run == 0) {
            out.dendrogram = std::move(r.dendrogram);
            out.frontier = r.frontier_size;
            have_result = true;
            continue;
        }
        total += elapsed;
        if (!have_result) {
            out.dendrogram = std::move(r.dendrogram);
            out.frontier = r.frontier_size;
            have_result = true;
        }
    }
    out.mean_time_s = std::max(total / static_cast<double>(cfg.repetitions), 1e-9);
    return out;
}

StepRecord make_record(const Graph &g, std::size_t step, Algorithm a, std::optional<DeleteRange> range,
                       const Timed &t, const ExperimentConfig &cfg) {
    const auto filtered = noise_filter(t.dendrogram.final_partition, cfg.min_cluster_size);
    const StepMetrics m = evaluate(g, filtered, cfg.log_base);
    return StepRecord{step, a, range, t.mean_time_s, m.modularity, m.wlogv, m.clusters, t.frontier};
}

/// Ordering key: static rows (no range) first, then ascending range, unbounded last.
bool range_less(const std::optional<DeleteRange> &a, const std::optional<DeleteRange> &b) {
    if (!a || !b)
        return !a && b;
    return *a < *b;
}

bool record_less(const StepRecord &a, const StepRecord &b) {
    if (a.step != b.step)
        return a.step < b.step;
    if (a.algorithm != b.algorithm)
        return a.algorithm < b.algorithm;
    return range_less(a.delete_range, b.delete_range);
}

} // namespace

std::vector<StepRecord> run_experiment(const DynamicGraph &stream, const ExperimentConfig &cfg) {
    if (cfg.repetitions < 1)
        throw InvalidConfig("repetitions must be at least 1");
    if (cfg.algorithms.empty())
        throw InvalidConfig("no algorithms selected");
    if (cfg.min_cluster_size < 1)
        throw InvalidConfig("min_cluster_size must be at least 1");
    const bool any_dynamic = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(), is_dynamic);
    if (any_dynamic && cfg.delete_ranges.empty())
        throw InvalidConfig("dynamic algorithms need at least one delete range");

    std::vector<Algorithm> algorithms = cfg.algorithms;
    std::sort(algorithms.begin(), algorithms.end());
    algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());
    std::vector<DeleteRange> ranges = cfg.delete_ranges;
    std::sort(ranges.begin(), ranges.end());
    ranges.erase(std::unique(ranges.begin(), ranges.end()), ranges.end());

    // Previous raw partition of every (dynamic algorithm, range) pair.
    std::map<std::pair<Algorithm, std::size_t>, std::vector<ClusterId>> previous;

    std::vector<StepRecord> records;
    Graph g = stream.initial;
    const ChangeSet no_changes;
    for (std::size_t t = 0; t <= stream.steps.size(); ++t) {
        const ChangeSet &cs = t == 0 ? no_changes : stream.steps[t - 1];
        if (t > 0)
            apply_changes_in_place(g, cs);

        for (Algorithm a : algorithms) {
            const SweepConfig sweep = sweep_config_for(cfg, a, t);
            auto static_run = [&] { return ReclusterResult{run_static(g, sweep), g.node_count()}; };
            if (!is_dynamic(a)) {
                records.push_back(make_record(g, t, a, std::nullopt, measure(cfg, static_run), cfg));
                continue;
            }
            for (std::size_t r = 0; r < ranges.size(); ++r) {
                auto &prev = previous[{a, r}];
                Timed timed = t == 0 ? measure(cfg, static_run)
                                     : measure(cfg, [&] { return recluster(g, cs, prev, ranges[r], sweep); });
                records.push_back(make_record(g, t, a, ranges[r], timed, cfg));
                prev = std::move(timed.dendrogram.final_partition);
            }
        }
    }
    sort_records(records);
    return records;
}

std::vector<SummaryRow> summarize(std::span<const StepRecord> records) {
    struct Acc {
        std::size_t n = 0;
        double time = 0, q = 0, s = 0, frontier = 0;
    };
    auto key_less = [](const std::pair<Algorithm, std::optional<DeleteRange>> &a,
                       const std::pair<Algorithm, std::optional<DeleteRange>> &b) {
        if (a.first != b.first)
            return a.first < b.first;
        return range_less(a.second, b.second);
    };
    std::map<std::pair<Algorithm, std::optional<DeleteRange>>, Acc, decltype(key_less)> groups(key_less);
    for (const StepRecord &r : records) {
        Acc &acc = groups[{r.algorithm, r.delete_range}];
        ++acc.n;
        acc.time += r.time_s;
        acc.q += r.modularity;
        acc.s += r.wlogv;
        acc.frontier += static_cast<double>(r.frontier);
    }

    std::vector<SummaryRow> rows;
    for (const auto &[key, acc] : groups) {
        SummaryRow row;
        row.algorithm = key.first;
        row.delete_range = key.second;
        row.steps = acc.n;
        const double n = static_cast<double>(acc.n);
        row.mean_time_s = acc.time / n;
        row.mean_modularity = acc.q / n;
        row.mean_wlogv = acc.s / n;
        row.mean_frontier = acc.frontier / n;

        const Algorithm base = baseline_of(key.first);
        auto it = groups.find({base, std::nullopt});
        if (it == groups.end())
            throw MissingBaseline("no " + std::string(to_string(base)) + " records to compare " +
                                  std::string(to_string(key.first)) + " against");
        const Acc &b = it->second;
        const double bn = static_cast<double>(b.n);
        row.time_pct = 100.0 * row.mean_time_s / (b.time / bn);
        row.modularity_pct = 100.0 * row.mean_modularity / (b.q / bn);
        row.wlogv_pct = 100.0 * row.mean_wlogv / (b.s / bn);
        rows.push_back(row);
    }
    return rows;
}

std::string format_summary(std::span<const SummaryRow> rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %6s %6s %12s %9s %10s %9s %9s %9s %9s\n", "algorithm", "range", "steps",
                  "time_s", "time%", "modularity", "Q%", "wlogv", "S%", "frontier");
    out << line;
    for (const SummaryRow &r : rows) {
        const std::string range = r.delete_range ? r.delete_range->to_string() : "-";
        std::snprintf(line, sizeof line, "%-12s %6s %6zu %12.6f %8.2f%% %10.4f %8.2f%% %9.4f %8.2f%% %9.1f\n",
                      std::string(to_string(r.algorithm)).c_str(), range.c_str(), r.steps, r.mean_time_s,
                      r.time_pct, r.mean_modularity, r.modularity_pct, r.mean_wlogv, r.wlogv_pct, r.mean_frontier);
        out << line;
    }
    return out.str();
}

void sort_records(std::vector<StepRecord> &records) { std::stable_sort(records.begin(), records.end(), record_less); }

void write_csv(std::ostream &out, std::span<const StepRecord> records) {
    std::vector<StepRecord> sorted(records.begin(), records.end());
    sort_records(sorted);
    out << kCsvHeader << '\n';
    for (const StepRecord &r : sorted) {
        out << r.step << ',' << to_string(r.algorithm) << ',' << (r.delete_range ? r.delete_range->to_string() : "")
            << ',' << format_double(r.time_s) << ',' << format_double(r.modularity) << ','
            << format_double(r.wlogv) << ',' << r.clusters << ',' << r.frontier << '\n';
    }
}

namespace {

template <typename T>
T csv_number(std::string_view field, std::size_t line) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(line, "bad CSV field '" + std::string(field) + "'");
    return value;
}

} // namespace

std::vector<StepRecord> read_csv(std::istream &in) {
    std::string line;
    std::size_t number = 1;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw ParseError(number, "missing CSV header");
    std::vector<StepRecord> records;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty())
            continue;
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        while (true) {
            auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != 8)
            throw ParseError(number, "expected 8 CSV fields");
        StepRecord r;
        r.step = csv_number<std::size_t>(fields[0], number);
        try {
            r.algorithm = parse_algorithm(fields[1]);
            if (!fields[2].empty())
                r.delete_range = DeleteRange::parse(fields[2]);
        } catch (const Error &e) {
            throw ParseError(number, e.what());
        }
        r.time_s = csv_number<double>(fields[3], number);
        r.modularity = csv_number<double>(fields[4], number);
        r.wlogv = csv_number<double>(fields[5], number);
        r.clusters = csv_number<std::size_t>(fields[6], number);
        r.frontier = csv_number<std::size_t>(fields[7], number);
        records.push_back(r);
    }
    return records;
}

void write_csv(std::span<const StepRecord> records, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    write_csv(out, records);
    if (!out)
        throw IoError("failed writing " + path.string());
}

std::vector<StepRecord> read_csv(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    return read_csv(in);
}

} // namespace dynclust
