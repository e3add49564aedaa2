#pragma once

#include "tradenet/graph.hpp"

#include <filesystem>

namespace tradenet {

enum class ExportFormat { edge_csv, graphml };

// Writes the graph for external visualization tools. edge_csv is the
// standard edge-list CSV (round-trips through the loader). graphml is a
// GraphML-style XML document whose node elements carry the region
// attribute (when a partition is given) and whose edges carry weights.
// Ordering is stable: nodes in graph order, edges sorted by endpoints.
void emit_graph_export(const TradeGraph& graph, const Partition* partition,
                       ExportFormat format, const std::filesystem::path& path);

} // namespace tradenet
