#include "tradenet/descriptives.hpp"

#include "tradenet/errors.hpp"

#include <algorithm>

namespace tradenet {

double density(const TradeGraph& graph) {
    auto n = graph.node_count();
    if (n < 2) {
        throw DataError("density undefined for n < 2");
    }
    return static_cast<double>(graph.edge_count()) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

double reciprocity(const TradeGraph& graph) {
    if (graph.edge_count() == 0) {
        throw DataError("reciprocity undefined for an empty edge set");
    }
    long long reciprocated = 0;
    for (const auto& [i, j, w] : graph.edges()) {
        if (graph.has_edge(j, i)) {
            ++reciprocated;
        }
    }
    return static_cast<double>(reciprocated) / static_cast<double>(graph.edge_count());
}

DyadCensus dyad_census(const TradeGraph& graph) {
    DyadCensus census;
    long long n = static_cast<long long>(graph.node_count());
    for (const auto& [i, j, w] : graph.edges()) {
        if (graph.has_edge(j, i)) {
            if (i < j) {
                ++census.mutual;
            }
        } else {
            ++census.asymmetric;
        }
    }
    census.null_dyads = n * (n - 1) / 2 - census.mutual - census.asymmetric;
    return census;
}

double degree_centralisation(const TradeGraph& graph, Direction dir) {
    auto n = graph.node_count();
    if (n < 2) {
        throw DataError("degree centralisation undefined for n < 2");
    }
    int d_max = 0;
    long long sum = 0;
    for (size_t i = 0; i < n; ++i) {
        d_max = std::max(d_max, graph.degree(static_cast<int>(i), dir));
    }
    for (size_t i = 0; i < n; ++i) {
        sum += d_max - graph.degree(static_cast<int>(i), dir);
    }
    double denom = static_cast<double>(n - 1) * static_cast<double>(n - 1);
    return static_cast<double>(sum) / denom;
}

double categorical_assortativity(const TradeGraph& graph, const Partition& partition) {
    if (graph.edge_count() == 0) {
        throw DataError("assortativity undefined for an empty edge set");
    }
    size_t g = partition.label_count();
    std::vector<double> mixing(g * g, 0.0);
    double total = static_cast<double>(graph.edge_count());
    for (const auto& [i, j, w] : graph.edges()) {
        mixing[static_cast<size_t>(partition.group(i)) * g +
               static_cast<size_t>(partition.group(j))] += 1.0 / total;
    }
    double trace = 0.0;
    double agreement = 0.0; // sum_g a_g * b_g
    for (size_t a = 0; a < g; ++a) {
        double row = 0.0;
        double col = 0.0;
        for (size_t b = 0; b < g; ++b) {
            row += mixing[a * g + b];
            col += mixing[b * g + a];
        }
        trace += mixing[a * g + a];
        agreement += row * col;
    }
    double denom = 1.0 - agreement;
    if (denom == 0.0) {
        throw DataError("assortativity undefined: all edges fall within one group");
    }
    return (trace - agreement) / denom;
}

EiScores ei_index(const TradeGraph& graph, const Partition& partition) {
    auto n = graph.node_count();
    EiScores scores;
    scores.internal_ties.assign(n, 0);
    scores.external_ties.assign(n, 0);
    scores.per_node.assign(n, std::nullopt);

    long long global_internal = 0;
    long long global_external = 0;
    for (const auto& [i, j, w] : graph.edges()) {
        bool internal = partition.group(i) == partition.group(j);
        auto& bucket_i = internal ? scores.internal_ties : scores.external_ties;
        bucket_i[static_cast<size_t>(i)] += 1;
        bucket_i[static_cast<size_t>(j)] += 1;
        (internal ? global_internal : global_external) += 1;
    }
    for (size_t v = 0; v < n; ++v) {
        long long e = scores.external_ties[v];
        long long i = scores.internal_ties[v];
        if (e + i > 0) {
            scores.per_node[v] = static_cast<double>(e - i) / static_cast<double>(e + i);
        }
    }
    long long tot = global_internal + global_external;
    scores.global = tot > 0 ? static_cast<double>(global_external - global_internal) /
                                  static_cast<double>(tot)
                            : 0.0;
    return scores;
}

DescriptiveReport describe(const TradeGraph& graph, const Partition& partition) {
    DescriptiveReport report;
    report.size = graph.node_count();
    report.density = density(graph);
    report.reciprocity = reciprocity(graph);
    report.in_centralisation = degree_centralisation(graph, Direction::in);
    report.out_centralisation = degree_centralisation(graph, Direction::out);
    report.regional_assortativity = categorical_assortativity(graph, partition);
    return report;
}

} // namespace tradenet
