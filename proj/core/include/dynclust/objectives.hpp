#pragma once

#include <cmath>
#include <span>
#include <string_view>

#include "dynclust/partition.hpp"

namespace dynclust {

/// Quality function optimized by the local-move phase.
enum class Objective { Modularity, Wlogv };

std::string_view to_string(Objective objective);

inline constexpr double kDefaultLogBase = 10.0;

/// Everything the gain formulas need to know about moving one node.
struct MoveContext {
    NodeId node = 0;
    ClusterId source = kUnassigned; ///< kUnassigned when the node is detached
    ClusterId target = 0;
    double strength = 0.0;         ///< k_i
    double self_loop = 0.0;
    double weight_to_target = 0.0; ///< k_i,in(target)
    double weight_to_source = 0.0; ///< k_i,in(source), excluding the node itself
};

MoveContext make_move_context(const Partition &p, NodeId i, ClusterId target);

/// Q = sum_c [ sum_in_c / m - (sum_tot_c / 2m)^2 ]; 0 when the graph has no edges.
double modularity(const Partition &p);
double modularity(const Graph &g, std::span<const ClusterId> labels);

/// S = -sum_c (w_c / M) log_b (v_c / M) with M = 2m. Throws EmptyGraph when m = 0.
double wlogv(const Partition &p, double log_base = kDefaultLogBase);
double wlogv(const Graph &g, std::span<const ClusterId> labels, double log_base = kDefaultLogBase);

double objective_value(const Partition &p, Objective objective, double log_base = kDefaultLogBase);

namespace gain {

// Gains of inserting a detached node (currently a virtual singleton) into a cluster
// whose statistics do not yet include it. The difference of two insertion gains is
// the exact objective change of a move.

inline double modularity_insertion(const ClusterStats &target, double strength, double weight_to_target,
                                   double total_weight) {
    return weight_to_target / total_weight -
           target.sum_tot * strength / (2.0 * total_weight * total_weight);
}

/// One cluster's share of S; zero within weight or volume contributes 0.
inline double wlogv_term(double within, double volume, double total_volume, double inv_log_base) {
    if (within <= 0.0 || volume <= 0.0)
        return 0.0;
    return -(within / total_volume) * std::log(volume / total_volume) * inv_log_base;
}

inline double wlogv_insertion(const ClusterStats &target, double strength, double self_loop,
                              double weight_to_target, double total_volume, double inv_log_base) {
    const double w = target.within_weight();
    const double v = target.volume();
    const double node_within = 2.0 * self_loop;
    return wlogv_term(w + 2.0 * weight_to_target + node_within, v + strength, total_volume, inv_log_base) -
           wlogv_term(w, v, total_volume, inv_log_base) -
           wlogv_term(node_within, strength, total_volume, inv_log_base);
}

} // namespace gain

/// Insertion gain into ctx.target; the target stats must not include the node.
double modularity_gain(const Partition &p, const MoveContext &ctx);
double wlogv_gain(const Partition &p, const MoveContext &ctx, double log_base = kDefaultLogBase);

/// Objective change of moving an assigned node from ctx.source to ctx.target,
/// evaluated from the two cluster terms only.
double move_delta(const Partition &p, const MoveContext &ctx, Objective objective,
                  double log_base = kDefaultLogBase);

} // namespace dynclust
