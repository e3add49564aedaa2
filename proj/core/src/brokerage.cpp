#include "tradenet/brokerage.hpp"

#include "tradenet/errors.hpp"

namespace tradenet {

BrokerageRole classify_roles(int group_i, int group_v, int group_j) {
    if (group_i == group_v) {
        if (group_v == group_j) {
            return BrokerageRole::coordinator;
        }
        return BrokerageRole::representative;
    }
    if (group_v == group_j) {
        return BrokerageRole::gatekeeper;
    }
    if (group_i == group_j) {
        return BrokerageRole::consultant;
    }
    return BrokerageRole::liaison;
}

BrokerageCensus brokerage_census(const TradeGraph& graph, const Partition& partition) {
    auto n = graph.node_count();
    if (partition.group_of.size() != n) {
        throw DataError("partition does not cover the graph's node set");
    }
    for (size_t v = 0; v < n; ++v) {
        if (partition.group_of[v] < 0) {
            throw DataError("unlabeled node: " + graph.node_labels()[v]);
        }
    }

    BrokerageCensus census;
    census.per_node.assign(n, {});
    for (size_t v = 0; v < n; ++v) {
        int gv = partition.group(static_cast<int>(v));
        auto& counts = census.per_node[v];
        for (const auto& [i, wi] : graph.in_neighbors(static_cast<int>(v))) {
            int gi = partition.group(i);
            for (const auto& [j, wj] : graph.out_neighbors(static_cast<int>(v))) {
                if (i == j) {
                    continue; // endpoints must be distinct actors
                }
                auto role = classify_roles(gi, gv, partition.group(j));
                ++counts.roles[static_cast<size_t>(role)];
                ++counts.total;
            }
        }
        for (size_t r = 0; r < kRoleCount; ++r) {
            census.network_totals[r] += counts.roles[r];
        }
        census.network_total += counts.total;
    }
    return census;
}

std::array<std::int64_t, kRoleCount> role_totals(const BrokerageCensus& census) {
    return census.network_totals;
}

std::vector<DegreeRoleRow> degree_role_table(const TradeGraph& graph, const Partition& partition) {
    auto census = brokerage_census(graph, partition);
    std::vector<DegreeRoleRow> rows;
    rows.reserve(graph.node_count());
    for (size_t v = 0; v < graph.node_count(); ++v) {
        DegreeRoleRow row;
        row.node = graph.node_labels()[v];
        row.region = partition.label_of(static_cast<int>(v));
        row.total_degree = graph.degree(static_cast<int>(v), Direction::total);
        row.counts = census.per_node[v];
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace tradenet
