#include "tradenet/significance.hpp"

#include "tradenet/errors.hpp"
#include "tradenet/parallel.hpp"

#include <cmath>

namespace tradenet {

namespace {

const std::array<std::string, 4> kSignificanceNames = {"motif", "anti_motif", "not_significant",
                                                       "degenerate"};

} // namespace

const std::string& significance_name(Significance s) {
    return kSignificanceNames[static_cast<size_t>(s)];
}

std::optional<double> z_score(double f_real, const std::vector<double>& null_counts) {
    if (null_counts.size() < 2) {
        throw ConfigError("z-score needs at least 2 null counts");
    }
    double mean = 0.0;
    for (double x : null_counts) mean += x;
    mean /= static_cast<double>(null_counts.size());
    double ss = 0.0;
    for (double x : null_counts) ss += (x - mean) * (x - mean);
    double sd = std::sqrt(ss / static_cast<double>(null_counts.size() - 1));
    if (sd == 0.0) return std::nullopt;
    return (f_real - mean) / sd;
}

Significance classify(std::optional<double> z, double threshold) {
    if (!z) return Significance::degenerate;
    if (*z > threshold) return Significance::motif;
    if (*z < -threshold) return Significance::anti_motif;
    return Significance::not_significant;
}

ZScoreReport role_significance_profile(const BrokerageCensus& observed,
                                       const std::vector<TradeGraph>& ensemble,
                                       const TradeGraph& observed_graph,
                                       const Partition& partition,
                                       const std::string& null_kind,
                                       double threshold, int threads) {
    if (ensemble.size() < 2) {
        throw DataError("significance profile needs an ensemble of at least 2 graphs");
    }
    for (const auto& member : ensemble) {
        if (member.node_labels() != observed_graph.node_labels()) {
            throw DataError("ensemble member node set differs from the observed graph");
        }
    }

    auto n = observed_graph.node_count();
    auto members = ensemble.size();
    std::vector<std::array<std::int64_t, kRoleCount>> totals(members);
    std::vector<std::vector<std::array<std::int64_t, kRoleCount>>> node_counts(members);
    parallel_for(static_cast<int>(members), resolve_threads(threads), [&](int k) {
        auto census = brokerage_census(ensemble[static_cast<size_t>(k)], partition);
        totals[static_cast<size_t>(k)] = census.network_totals;
        auto& per_node = node_counts[static_cast<size_t>(k)];
        per_node.resize(n);
        for (size_t v = 0; v < n; ++v) {
            per_node[v] = census.per_node[v].roles;
        }
    });

    ZScoreReport report;
    report.ensemble_size = members;
    report.null_kind = null_kind;
    report.threshold = threshold;

    std::vector<double> nulls(members);
    for (size_t role = 0; role < kRoleCount; ++role) {
        for (size_t k = 0; k < members; ++k) {
            nulls[k] = static_cast<double>(totals[k][role]);
        }
        auto& entry = report.per_role[role];
        entry.f_real = observed.network_totals[role];
        double mean = 0.0;
        for (double x : nulls) mean += x;
        mean /= static_cast<double>(members);
        double ss = 0.0;
        for (double x : nulls) ss += (x - mean) * (x - mean);
        entry.null_mean = mean;
        entry.null_std = std::sqrt(ss / static_cast<double>(members - 1));
        entry.z = z_score(static_cast<double>(entry.f_real), nulls);
        entry.classification = classify(entry.z, threshold);
    }

    report.node_labels = observed_graph.node_labels();
    report.observed_by_node.resize(n);
    report.null_mean_by_node.resize(n);
    for (size_t v = 0; v < n; ++v) {
        report.observed_by_node[v] = observed.per_node[v].roles;
        std::array<double, kRoleCount> mean{};
        for (size_t k = 0; k < members; ++k) {
            for (size_t role = 0; role < kRoleCount; ++role) {
                mean[role] += static_cast<double>(node_counts[k][v][role]);
            }
        }
        for (auto& m : mean) m /= static_cast<double>(members);
        report.null_mean_by_node[v] = mean;
    }
    return report;
}

} // namespace tradenet
