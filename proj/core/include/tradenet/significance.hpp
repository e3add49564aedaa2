#pragma once

#include "tradenet/brokerage.hpp"
#include "tradenet/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tradenet {

enum class Significance { motif, anti_motif, not_significant, degenerate };

const std::string& significance_name(Significance s);

// (f_real - mean) / sample standard deviation; nullopt when the ensemble
// has zero variance. Needs at least two null counts.
std::optional<double> z_score(double f_real, const std::vector<double>& null_counts);

Significance classify(std::optional<double> z, double threshold = 2.0);

struct RoleZ {
    std::int64_t f_real = 0;
    double null_mean = 0.0;
    double null_std = 0.0;
    std::optional<double> z; // empty = degenerate (zero-variance ensemble)
    Significance classification = Significance::not_significant;
};

struct ZScoreReport {
    std::array<RoleZ, kRoleCount> per_role;
    std::size_t ensemble_size = 0;
    std::string null_kind; // "ergm" | "degree"
    double threshold = 2.0;
    // Per-node observed role totals vs. ensemble means, for the per-country
    // breakdown (classification is reported for network totals only).
    std::vector<std::string> node_labels;
    std::vector<std::array<std::int64_t, kRoleCount>> observed_by_node;
    std::vector<std::array<double, kRoleCount>> null_mean_by_node;
};

// Runs the brokerage census on every ensemble member (same node set and
// partition as the observed graph) and scores the observed role totals
// against the ensemble distribution.
ZScoreReport role_significance_profile(const BrokerageCensus& observed,
                                       const std::vector<TradeGraph>& ensemble,
                                       const TradeGraph& observed_graph,
                                       const Partition& partition,
                                       const std::string& null_kind,
                                       double threshold = 2.0,
                                       int threads = 0);

} // namespace tradenet
