#pragma once

#include "tradenet/graph.hpp"

#include <optional>
#include <vector>

namespace tradenet {

// Mutual / asymmetric / null counts over unordered node pairs.
struct DyadCensus {
    long long mutual = 0;
    long long asymmetric = 0;
    long long null_dyads = 0;
};

struct DescriptiveReport {
    std::size_t size = 0;
    double density = 0.0;
    double reciprocity = 0.0;
    double in_centralisation = 0.0;
    double out_centralisation = 0.0;
    double regional_assortativity = 0.0;
};

struct EiScores {
    // Per node: internal/external incident-tie counts and the score, which
    // is undefined for isolates.
    std::vector<long long> internal_ties;
    std::vector<long long> external_ties;
    std::vector<std::optional<double>> per_node;
    double global = 0.0;
};

double density(const TradeGraph& graph);

// Fraction of edges whose reverse edge exists.
double reciprocity(const TradeGraph& graph);

DyadCensus dyad_census(const TradeGraph& graph);

// Freeman-style degree centralisation: sum_i (d_max - d_i) / (n-1)^2.
double degree_centralisation(const TradeGraph& graph, Direction dir);

// Newman categorical assortativity over directed edges.
double categorical_assortativity(const TradeGraph& graph, const Partition& partition);

// Krackhardt-Stern E-I index, per node and network-wide. Every directed
// edge incident to a node counts as one tie, so a reciprocated dyad
// contributes two.
EiScores ei_index(const TradeGraph& graph, const Partition& partition);

// The headline bundle: size, density, reciprocity, in/out centralisation,
// regional assortativity.
DescriptiveReport describe(const TradeGraph& graph, const Partition& partition);

} // namespace tradenet
