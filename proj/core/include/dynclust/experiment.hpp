#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynclust/dynamic.hpp"

namespace dynclust {

/// Infomap here means Louvain-style optimization of the wlogv objective.
enum class Algorithm { Louvain, LouvainDyn, Infomap, InfomapDyn };

std::string_view to_string(Algorithm a);
/// Accepts louvain, louvain-dyn, infomap, infomap-dyn. Throws InvalidConfig.
Algorithm parse_algorithm(std::string_view name);
bool is_dynamic(Algorithm a);
Objective objective_of(Algorithm a);
/// Static counterpart of an algorithm (identity for static ones).
Algorithm baseline_of(Algorithm a);

struct ExperimentConfig {
    std::vector<Algorithm> algorithms{Algorithm::Louvain, Algorithm::LouvainDyn, Algorithm::Infomap,
                                      Algorithm::InfomapDyn};
    /// Used by the dynamic algorithms only.
    std::vector<DeleteRange> delete_ranges{DeleteRange(1)};
    std::size_t repetitions = 1;
    std::uint64_t seed = 0;
    std::size_t min_cluster_size = kDefaultMinClusterSize;
    /// Run one extra, untimed repetition first.
    bool warmup = true;
    double log_base = kDefaultLogBase;
    double min_gain = 0.0;
    std::size_t max_sweeps = 100;
};

struct StepRecord {
    std::size_t step = 0;
    Algorithm algorithm = Algorithm::Louvain;
    /// Empty for static algorithms.
    std::optional<DeleteRange> delete_range;
    double time_s = 0.0;
    double modularity = 0.0;
    double wlogv = 0.0;
    std::size_t clusters = 0;
    /// Nodes visited by the first level.
    std::size_t frontier = 0;

    friend bool operator==(const StepRecord &, const StepRecord &) = default;
};

/// Sweep configuration used for time step `step` of an experiment.
SweepConfig sweep_config_for(const ExperimentConfig &cfg, Algorithm a, std::size_t step);

/**
 * Replays the stream once and clusters every time step with every configured
 * algorithm (and delete range, for dynamic ones). Static algorithms recluster from
 * scratch; dynamic ones carry their partition forward, step 0 being a static run.
 * Only the clustering call is timed; times are averaged over the repetitions.
 * Quality is measured on the noise-filtered partition. Records come back in
 * (step, algorithm, delete range) order.
 */
std::vector<StepRecord> run_experiment(const DynamicGraph &stream, const ExperimentConfig &cfg);

struct SummaryRow {
    Algorithm algorithm = Algorithm::Louvain;
    std::optional<DeleteRange> delete_range;
    std::size_t steps = 0;
    double mean_time_s = 0.0;
    double mean_modularity = 0.0;
    double mean_wlogv = 0.0;
    double mean_frontier = 0.0;
    /// Percentages of the static baseline's means.
    double time_pct = 100.0;
    double modularity_pct = 100.0;
    double wlogv_pct = 100.0;
};

/// Per (algorithm, delete range) means and ratios to the static baseline. Throws MissingBaseline.
std::vector<SummaryRow> summarize(std::span<const StepRecord> records);

std::string format_summary(std::span<const SummaryRow> rows);

inline constexpr std::string_view kCsvHeader = "step,algorithm,delete_range,time_s,modularity,wlogv,clusters,frontier";

/// Sorts records by (step, algorithm, delete range) in place.
void sort_records(std::vector<StepRecord> &records);

void write_csv(std::ostream &out, std::span<const StepRecord> records);
std::vector<StepRecord> read_csv(std::istream &in);
void write_csv(std::span<const StepRecord> records, const std::filesystem::path &path);
std::vector<StepRecord> read_csv(const std::filesystem::path &path);

} // namespace dynclust
