#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "dynclust/changes.hpp"

namespace dynclust {

/*
 * Dynamic graph stream, UTF-8 text with LF line endings:
 *
 *   DYNGRAPH 1
 *   N <node_count>
 *   E <u> <v> <w>          initial edges
 *   T <step_index>         starts a change set
 *   + <u> <v> <w>          add
 *   - <u> <v>              remove
 *   ~ <u> <v> <w>          reweight
 *
 * Lines starting with '#' and blank lines are ignored.
 */
inline constexpr int kStreamVersion = 1;

void write_stream(std::ostream &out, const DynamicGraph &dg);
DynamicGraph read_stream(std::istream &in);

void save_stream(const DynamicGraph &dg, const std::filesystem::path &path);
DynamicGraph load_stream(const std::filesystem::path &path);

/// Ground-truth labels of one predefined graph step.
struct GroundTruth {
    std::size_t step_index = 0;
    std::vector<ClusterId> labels;

    friend bool operator==(const GroundTruth &, const GroundTruth &) = default;
};

/// Sidecar format: `GT <step_index>` followed by `C <node> <cluster>` lines.
void write_ground_truth(std::ostream &out, const std::vector<GroundTruth> &truth);
std::vector<GroundTruth> read_ground_truth(std::istream &in);

void save_ground_truth(const std::vector<GroundTruth> &truth, const std::filesystem::path &path);
std::vector<GroundTruth> load_ground_truth(const std::filesystem::path &path);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

} // namespace dynclust
