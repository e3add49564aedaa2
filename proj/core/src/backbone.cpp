#include "tradenet/backbone.hpp"

#include "tradenet/errors.hpp"

#include <cmath>

namespace tradenet {

namespace {

double one_sided_alpha(double weight, double strength, int degree) {
    if (degree <= 1) {
        return 1.0;
    }
    double p = weight / strength;
    if (p >= 1.0) {
        return 0.0;
    }
    return std::pow(1.0 - p, degree - 1);
}

} // namespace

double edge_alpha(const TradeGraph& graph, int source, int target, Endpoint endpoint) {
    double w = graph.edge_weight(source, target); // throws if the edge is missing
    if (endpoint == Endpoint::source) {
        return one_sided_alpha(w, graph.strength(source, Direction::out),
                               graph.degree(source, Direction::out));
    }
    return one_sided_alpha(w, graph.strength(target, Direction::in),
                           graph.degree(target, Direction::in));
}

BackboneResult disparity_filter(const TradeGraph& graph, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie in (0,1), got " + std::to_string(alpha));
    }
    if (graph.node_count() == 0) {
        throw DataError("disparity filter on empty graph");
    }

    BackboneResult result;
    result.alpha = alpha;

    std::vector<double> out_strength(graph.node_count());
    std::vector<double> in_strength(graph.node_count());
    for (size_t i = 0; i < graph.node_count(); ++i) {
        out_strength[i] = graph.strength(static_cast<int>(i), Direction::out);
        in_strength[i] = graph.strength(static_cast<int>(i), Direction::in);
    }

    std::vector<EdgeRecord> kept;
    for (const auto& [i, j, w] : graph.edges()) {
        EdgeScore score;
        score.alpha_out = one_sided_alpha(w, out_strength[static_cast<size_t>(i)],
                                          graph.degree(i, Direction::out));
        score.alpha_in = one_sided_alpha(w, in_strength[static_cast<size_t>(j)],
                                         graph.degree(j, Direction::in));
        score.retained = std::min(score.alpha_out, score.alpha_in) < alpha;
        result.edge_scores.emplace(std::make_pair(i, j), score);
        if (score.retained) {
            result.retained.emplace(i, j);
            kept.push_back({graph.label(i), graph.label(j), w});
        }
    }

    TradeGraph filtered = TradeGraph::over_nodes(graph.node_labels(), kept);
    result.backbone = filtered.drop_isolates(&result.removed_nodes);
    return result;
}

} // namespace tradenet
