#include "tradenet/core_periphery.hpp"

#include "tradenet/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tradenet {

CoreAssignment rich_core(const TradeGraph& graph, Direction strength_dir) {
    auto n = graph.node_count();
    if (n == 0) {
        throw DataError("rich core undefined for an empty graph");
    }

    std::vector<double> strength(n);
    for (size_t i = 0; i < n; ++i) {
        strength[i] = graph.strength(static_cast<int>(i), strength_dir);
    }

    CoreAssignment result;
    result.ranking.resize(n);
    std::iota(result.ranking.begin(), result.ranking.end(), 0);
    std::stable_sort(result.ranking.begin(), result.ranking.end(), [&](int a, int b) {
        return strength[static_cast<size_t>(a)] > strength[static_cast<size_t>(b)];
    });

    std::vector<int> rank_of(n);
    for (size_t r = 0; r < n; ++r) {
        rank_of[static_cast<size_t>(result.ranking[r])] = static_cast<int>(r);
    }
    for (size_t r = 1; r < n; ++r) {
        if (strength[static_cast<size_t>(result.ranking[r])] ==
            strength[static_cast<size_t>(result.ranking[r - 1])]) {
            if (result.tied_ranks.empty() ||
                result.tied_ranks.back() != static_cast<int>(r)) {
                result.tied_ranks.push_back(static_cast<int>(r));
            }
            result.tied_ranks.push_back(static_cast<int>(r + 1));
        }
    }

    // sigma_plus[r] = weight on edges (either direction) between the node
    // at rank r and all higher-ranked nodes.
    result.sigma_plus.assign(n, 0.0);
    for (const auto& [i, j, w] : graph.edges()) {
        int ri = rank_of[static_cast<size_t>(i)];
        int rj = rank_of[static_cast<size_t>(j)];
        result.sigma_plus[static_cast<size_t>(std::max(ri, rj))] += w;
    }

    size_t best = 0;
    for (size_t r = 1; r < n; ++r) {
        if (result.sigma_plus[r] > result.sigma_plus[best]) {
            best = r;
        }
    }
    result.r_star = static_cast<int>(best) + 1;

    for (size_t r = 0; r < n; ++r) {
        if (r < static_cast<size_t>(result.r_star)) {
            result.core.insert(result.ranking[r]);
        } else {
            result.periphery.insert(result.ranking[r]);
        }
    }
    return result;
}

} // namespace tradenet
