#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tradenet {

enum class Direction { in, out, total };

struct EdgeRecord {
    std::string source;
    std::string target;
    double weight = 0.0;
};

// Side channel for non-fatal load events (self-loops dropped, duplicate
// records merged, partition rows for unknown nodes).
struct LoadReport {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_merged = 0;
    std::vector<std::string> warnings;
};

/// Directed weighted simple graph over string-labeled nodes.
///
/// Immutable after construction and safe to share across threads. Node
/// order is first-appearance order in the input records, which fixes all
/// downstream iteration and tie-breaking. Nodes are addressed internally
/// by dense index; labels are raw strings compared case-sensitively.
class TradeGraph {
public:
    TradeGraph() = default;

    // Aggregates duplicate (source,target) records by weight summation,
    // drops self-loops (tallied in the report), rejects non-positive
    // weights. Duplicate weights are summed in a canonical order so the
    // result is bit-identical under record permutation.
    static TradeGraph from_records(const std::vector<EdgeRecord>& records,
                                   LoadReport* report = nullptr);

    // Same, but over a fixed node universe (in the given order), so nodes
    // without incident edges are kept. Simulated ensembles use this to
    // stay node-aligned with the observed graph.
    static TradeGraph over_nodes(const std::vector<std::string>& node_labels,
                                 const std::vector<EdgeRecord>& records,
                                 LoadReport* report = nullptr);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<std::string>& node_labels() const { return labels_; }
    const std::string& label(int node) const { return labels_[static_cast<size_t>(node)]; }
    std::optional<int> index_of(std::string_view label) const;
    // Throws DataError on unknown label.
    int require_index(std::string_view label) const;

    int degree(int node, Direction dir) const;
    double strength(int node, Direction dir) const;
    int degree(std::string_view label, Direction dir) const;
    double strength(std::string_view label, Direction dir) const;

    bool has_edge(int source, int target) const;
    // Throws DataError when the edge is missing.
    double edge_weight(int source, int target) const;

    // Neighbor lists are sorted by neighbor index.
    const std::vector<std::pair<int, double>>& out_neighbors(int node) const {
        return out_adj_[static_cast<size_t>(node)];
    }
    const std::vector<std::pair<int, double>>& in_neighbors(int node) const {
        return in_adj_[static_cast<size_t>(node)];
    }

    // All edges as (source, target, weight), sorted by (source, target).
    std::vector<std::tuple<int, int, double>> edges() const;
    std::vector<EdgeRecord> to_records() const;

    // Restriction to nodes with total degree >= 1, order preserved.
    TradeGraph drop_isolates(std::vector<std::string>* removed = nullptr) const;

    // Same node set (order-insensitive), same edge set, identical weights.
    bool equivalent_to(const TradeGraph& other) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<std::pair<int, double>>> out_adj_;
    std::vector<std::vector<std::pair<int, double>>> in_adj_;
    std::size_t edge_count_ = 0;

    int intern(const std::string& label);
};

/// Node -> group label assignment with an ordered label set and a
/// designated baseline label (used by ERGM factor terms).
struct Partition {
    std::vector<int> group_of;        // node index -> label index
    std::vector<std::string> labels;  // first-appearance order
    int baseline = 0;                 // index into labels

    int group(int node) const { return group_of[static_cast<size_t>(node)]; }
    const std::string& label_of(int node) const {
        return labels[static_cast<size_t>(group_of[static_cast<size_t>(node)])];
    }
    std::size_t label_count() const { return labels.size(); }
};

struct PartitionRecord {
    std::string node;
    std::string label;
};

// Builds a partition over the graph's node set. Records for nodes absent
// from the graph are ignored with a warning; graph nodes missing from the
// records are an error. When `baseline` is empty the first observed label
// is used.
Partition load_partition(const std::vector<PartitionRecord>& records,
                         const TradeGraph& graph,
                         const std::string& baseline = {},
                         LoadReport* report = nullptr);

// Edge-list CSV: header `source,target,weight`, weight a decimal literal.
// Parse failures raise DataError with the 1-based line number.
std::vector<EdgeRecord> parse_edge_list_csv(const std::filesystem::path& path);
TradeGraph load_edge_list_csv(const std::filesystem::path& path, LoadReport* report = nullptr);
void write_edge_list_csv(const TradeGraph& graph, const std::filesystem::path& path);

// Partition CSV: header `node,region`.
std::vector<PartitionRecord> parse_partition_csv(const std::filesystem::path& path);
Partition load_partition_csv(const std::filesystem::path& path,
                             const TradeGraph& graph,
                             const std::string& baseline = {},
                             LoadReport* report = nullptr);

} // namespace tradenet
