#pragma once

#include "tradenet/graph.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tradenet {

enum class Endpoint { source, target };

struct EdgeScore {
    double alpha_out = 1.0; // significance from the source side
    double alpha_in = 1.0;  // significance from the target side
    bool retained = false;
};

struct BackboneResult {
    TradeGraph backbone;                           // retained edges, isolates dropped
    std::set<std::pair<int, int>> retained;        // node indices of the input graph
    std::map<std::pair<int, int>, EdgeScore> edge_scores;
    double alpha = 0.05;
    std::vector<std::string> removed_nodes;        // isolated by filtering
};

// Disparity-filter p-value of one edge at one endpoint: (1 - p)^(k - 1)
// with p the weight's share of the endpoint's directed strength and k the
// endpoint's directed degree. k = 1 returns 1.0: a sole edge is never
// significant at its own endpoint.
double edge_alpha(const TradeGraph& graph, int source, int target, Endpoint endpoint);

// Multiscale backbone at significance level alpha in (0,1). An edge is
// retained iff it is significant at its source (out direction) or target
// (in direction): min(alpha_out, alpha_in) < alpha. Weights are preserved
// bit-for-bit; nodes isolated by the filter are dropped and reported.
BackboneResult disparity_filter(const TradeGraph& graph, double alpha);

} // namespace tradenet
