#pragma once

#include "tradenet/graph.hpp"

#include <set>
#include <vector>

namespace tradenet {

struct CoreAssignment {
    std::vector<int> ranking;        // node indices, decreasing strength
    std::vector<double> sigma_plus;  // aligned with ranking; sigma_plus[0] == 0
    int r_star = 1;                  // 1-based rank where sigma_plus peaks
    std::set<int> core;
    std::set<int> periphery;
    // Ranks sharing a strength value with a neighbor rank (ties broken by
    // node order); reported so the determinism of the split is auditable.
    std::vector<int> tied_ranks;
};

// Rich-core split: rank nodes by decreasing strength (ties broken by node
// order), accumulate for each rank the weight on edges to higher-ranked
// nodes (both directions), and cut at the first rank maximizing that
// quantity. Core = ranks <= r_star.
CoreAssignment rich_core(const TradeGraph& graph, Direction strength_dir = Direction::total);

} // namespace tradenet
