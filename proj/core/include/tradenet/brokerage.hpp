#pragma once

#include "tradenet/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tradenet {

// The five Gould-Fernandez roles of a broker v on an ordered two-path
// i -> v -> j, classified by the group labels of the three actors.
enum class BrokerageRole : int {
    coordinator = 0,    // g(i) == g(v) == g(j)
    gatekeeper = 1,     // g(i) != g(v), g(v) == g(j)
    representative = 2, // g(i) == g(v), g(v) != g(j)
    consultant = 3,     // g(i) == g(j), both != g(v)
    liaison = 4,        // all three groups distinct
};

inline constexpr int kRoleCount = 5;
inline constexpr std::array<const char*, kRoleCount> kRoleNames = {
    "coordinator", "gatekeeper", "representative", "consultant", "liaison"};

struct NodeRoleCounts {
    std::array<std::int64_t, kRoleCount> roles{};
    std::int64_t total = 0;
};

struct BrokerageCensus {
    std::vector<NodeRoleCounts> per_node;            // aligned with node order
    std::array<std::int64_t, kRoleCount> network_totals{};
    std::int64_t network_total = 0;
};

// Classifies one two-path by the three group labels.
BrokerageRole classify_roles(int group_i, int group_v, int group_j);

// Counts, for every node v and every ordered two-path i->v->j with i, v, j
// pairwise distinct, the GF role v plays. Two-paths are counted whether or
// not the direct tie i->j exists. Cost is sum over v of d_in(v)*d_out(v).
BrokerageCensus brokerage_census(const TradeGraph& graph, const Partition& partition);

std::array<std::int64_t, kRoleCount> role_totals(const BrokerageCensus& census);

struct DegreeRoleRow {
    std::string node;
    std::string region;
    int total_degree = 0;
    NodeRoleCounts counts;
};

// One row per node in node order: degree alongside the five role counts
// (the data behind the degree-vs-roles figures).
std::vector<DegreeRoleRow> degree_role_table(const TradeGraph& graph, const Partition& partition);

} // namespace tradenet
