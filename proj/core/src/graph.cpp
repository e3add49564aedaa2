#include "tradenet/graph.hpp"

#include "tradenet/csv.hpp"
#include "tradenet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

namespace tradenet {

int TradeGraph::intern(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) {
        return it->second;
    }
    int id = static_cast<int>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    return id;
}

TradeGraph TradeGraph::from_records(const std::vector<EdgeRecord>& records, LoadReport* report) {
    return over_nodes({}, records, report);
}

TradeGraph TradeGraph::over_nodes(const std::vector<std::string>& node_labels,
                                  const std::vector<EdgeRecord>& records,
                                  LoadReport* report) {
    TradeGraph g;
    for (const auto& label : node_labels) {
        if (label.empty()) {
            throw DataError("empty node label in node universe");
        }
        g.intern(label);
    }
    LoadReport local;
    LoadReport& rep = report ? *report : local;

    // Per-dyad weight lists, keyed by (source,target) index pair. Summation
    // happens after sorting each list so the aggregate does not depend on
    // record order.
    std::map<std::pair<int, int>, std::vector<double>> dyads;
    for (const auto& rec : records) {
        if (rec.source.empty() || rec.target.empty()) {
            throw DataError("edge record with empty node label");
        }
        if (!(rec.weight > 0.0) || !std::isfinite(rec.weight)) {
            throw DataError("edge " + rec.source + "->" + rec.target +
                            " has non-positive or non-finite weight");
        }
        int s = g.intern(rec.source);
        int t = g.intern(rec.target);
        if (s == t) {
            ++rep.self_loops_dropped;
            continue;
        }
        dyads[{s, t}].push_back(rec.weight);
    }
    if (rep.self_loops_dropped > 0) {
        rep.warnings.push_back("dropped " + std::to_string(rep.self_loops_dropped) +
                               " self-loop record(s)");
    }

    g.out_adj_.assign(g.labels_.size(), {});
    g.in_adj_.assign(g.labels_.size(), {});
    for (auto& [key, weights] : dyads) {
        if (weights.size() > 1) {
            rep.duplicates_merged += weights.size() - 1;
            std::sort(weights.begin(), weights.end());
        }
        double total = 0.0;
        for (double w : weights) {
            total += w;
        }
        g.out_adj_[static_cast<size_t>(key.first)].emplace_back(key.second, total);
        g.in_adj_[static_cast<size_t>(key.second)].emplace_back(key.first, total);
        ++g.edge_count_;
    }
    if (rep.duplicates_merged > 0) {
        rep.warnings.push_back("aggregated " + std::to_string(rep.duplicates_merged) +
                               " duplicate edge record(s) by weight summation");
    }
    for (auto& adj : g.out_adj_) {
        std::sort(adj.begin(), adj.end());
    }
    for (auto& adj : g.in_adj_) {
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

std::optional<int> TradeGraph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

int TradeGraph::require_index(std::string_view label) const {
    auto idx = index_of(label);
    if (!idx) {
        throw DataError("unknown node: " + std::string(label));
    }
    return *idx;
}

int TradeGraph::degree(int node, Direction dir) const {
    auto n = static_cast<size_t>(node);
    switch (dir) {
    case Direction::in:
        return static_cast<int>(in_adj_[n].size());
    case Direction::out:
        return static_cast<int>(out_adj_[n].size());
    case Direction::total:
        return static_cast<int>(in_adj_[n].size() + out_adj_[n].size());
    }
    return 0;
}

double TradeGraph::strength(int node, Direction dir) const {
    auto n = static_cast<size_t>(node);
    double sum = 0.0;
    if (dir == Direction::in || dir == Direction::total) {
        for (const auto& [nbr, w] : in_adj_[n]) {
            sum += w;
        }
    }
    if (dir == Direction::out || dir == Direction::total) {
        for (const auto& [nbr, w] : out_adj_[n]) {
            sum += w;
        }
    }
    return sum;
}

int TradeGraph::degree(std::string_view label, Direction dir) const {
    return degree(require_index(label), dir);
}

double TradeGraph::strength(std::string_view label, Direction dir) const {
    return strength(require_index(label), dir);
}

namespace {

const std::pair<int, double>* find_neighbor(const std::vector<std::pair<int, double>>& adj,
                                            int target) {
    auto it = std::lower_bound(adj.begin(), adj.end(), target,
                               [](const std::pair<int, double>& e, int t) { return e.first < t; });
    if (it == adj.end() || it->first != target) {
        return nullptr;
    }
    return &*it;
}

} // namespace

bool TradeGraph::has_edge(int source, int target) const {
    return find_neighbor(out_adj_[static_cast<size_t>(source)], target) != nullptr;
}

double TradeGraph::edge_weight(int source, int target) const {
    const auto* e = find_neighbor(out_adj_[static_cast<size_t>(source)], target);
    if (!e) {
        throw DataError("no edge " + label(source) + "->" + label(target));
    }
    return e->second;
}

std::vector<std::tuple<int, int, double>> TradeGraph::edges() const {
    std::vector<std::tuple<int, int, double>> result;
    result.reserve(edge_count_);
    for (size_t i = 0; i < out_adj_.size(); ++i) {
        for (const auto& [j, w] : out_adj_[i]) {
            result.emplace_back(static_cast<int>(i), j, w);
        }
    }
    return result;
}

std::vector<EdgeRecord> TradeGraph::to_records() const {
    std::vector<EdgeRecord> records;
    records.reserve(edge_count_);
    for (const auto& [i, j, w] : edges()) {
        records.push_back({label(i), label(j), w});
    }
    return records;
}

TradeGraph TradeGraph::drop_isolates(std::vector<std::string>* removed) const {
    TradeGraph g;
    std::vector<int> remap(labels_.size(), -1);
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (degree(static_cast<int>(i), Direction::total) >= 1) {
            remap[i] = g.intern(labels_[i]);
        } else if (removed) {
            removed->push_back(labels_[i]);
        }
    }
    g.out_adj_.assign(g.labels_.size(), {});
    g.in_adj_.assign(g.labels_.size(), {});
    for (size_t i = 0; i < out_adj_.size(); ++i) {
        for (const auto& [j, w] : out_adj_[i]) {
            int s = remap[i];
            int t = remap[static_cast<size_t>(j)];
            g.out_adj_[static_cast<size_t>(s)].emplace_back(t, w);
            g.in_adj_[static_cast<size_t>(t)].emplace_back(s, w);
            ++g.edge_count_;
        }
    }
    for (auto& adj : g.out_adj_) {
        std::sort(adj.begin(), adj.end());
    }
    for (auto& adj : g.in_adj_) {
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

bool TradeGraph::equivalent_to(const TradeGraph& other) const {
    if (node_count() != other.node_count() || edge_count() != other.edge_count()) {
        return false;
    }
    std::vector<std::string> mine = labels_;
    std::vector<std::string> theirs = other.labels_;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs) {
        return false;
    }
    for (const auto& [i, j, w] : edges()) {
        int oi = other.index_.at(labels_[static_cast<size_t>(i)]);
        int oj = other.index_.at(labels_[static_cast<size_t>(j)]);
        const auto* e = find_neighbor(other.out_adj_[static_cast<size_t>(oi)], oj);
        if (!e || e->second != w) {
            return false;
        }
    }
    return true;
}

Partition load_partition(const std::vector<PartitionRecord>& records,
                         const TradeGraph& graph,
                         const std::string& baseline,
                         LoadReport* report) {
    Partition part;
    part.group_of.assign(graph.node_count(), -1);
    std::unordered_map<std::string, int> label_index;
    size_t ignored = 0;

    for (const auto& rec : records) {
        auto node = graph.index_of(rec.node);
        if (!node) {
            ++ignored;
            if (report) {
                report->warnings.push_back("partition row for node '" + rec.node +
                                           "' absent from graph; ignored");
            }
            continue;
        }
        if (rec.label.empty()) {
            throw DataError("empty group label for node " + rec.node);
        }
        auto [it, inserted] = label_index.emplace(rec.label, static_cast<int>(part.labels.size()));
        if (inserted) {
            part.labels.push_back(rec.label);
        }
        int prev = part.group_of[static_cast<size_t>(*node)];
        if (prev != -1 && prev != it->second) {
            throw DataError("node " + rec.node + " assigned to multiple groups");
        }
        part.group_of[static_cast<size_t>(*node)] = it->second;
    }
    (void)ignored;

    std::vector<std::string> unlabeled;
    for (size_t i = 0; i < graph.node_count(); ++i) {
        if (part.group_of[i] == -1) {
            unlabeled.push_back(graph.node_labels()[i]);
        }
    }
    if (!unlabeled.empty()) {
        std::string msg = "unlabeled node(s):";
        for (const auto& l : unlabeled) {
            msg += " " + l;
        }
        throw DataError(msg);
    }

    if (baseline.empty()) {
        if (part.labels.empty()) {
            throw DataError("partition has no labels");
        }
        part.baseline = 0;
    } else {
        auto it = label_index.find(baseline);
        if (it == label_index.end()) {
            throw DataError("baseline label '" + baseline + "' not among observed labels");
        }
        part.baseline = it->second;
    }
    return part;
}

std::vector<EdgeRecord> parse_edge_list_csv(const std::filesystem::path& path) {
    auto rows = csv::read_file(path);
    if (rows.empty()) {
        throw DataError("empty edge-list file: " + path.string());
    }
    std::vector<EdgeRecord> records;
    records.reserve(rows.size());
    size_t start = 0;
    if (rows[0].size() >= 3 && rows[0][0] == "source" && rows[0][1] == "target") {
        start = 1;
    }
    for (size_t r = start; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 3) {
            throw DataError(path.string() + ":" + std::to_string(r + 1) +
                            ": expected 3 fields (source,target,weight), got " +
                            std::to_string(row.size()));
        }
        double w = 0.0;
        if (!csv::parse_double(row[2], w)) {
            throw DataError(path.string() + ":" + std::to_string(r + 1) +
                            ": non-numeric weight '" + row[2] + "'");
        }
        records.push_back({row[0], row[1], w});
    }
    return records;
}

TradeGraph load_edge_list_csv(const std::filesystem::path& path, LoadReport* report) {
    return TradeGraph::from_records(parse_edge_list_csv(path), report);
}

void write_edge_list_csv(const TradeGraph& graph, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << "source,target,weight\n";
    for (const auto& [i, j, w] : graph.edges()) {
        csv::write_row(out, {graph.label(i), graph.label(j), csv::format_double(w)});
    }
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::vector<PartitionRecord> parse_partition_csv(const std::filesystem::path& path) {
    auto rows = csv::read_file(path);
    if (rows.empty()) {
        throw DataError("empty partition file: " + path.string());
    }
    std::vector<PartitionRecord> records;
    size_t start = 0;
    if (rows[0].size() >= 2 && rows[0][0] == "node") {
        start = 1;
    }
    for (size_t r = start; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 2) {
            throw DataError(path.string() + ":" + std::to_string(r + 1) +
                            ": expected 2 fields (node,region), got " +
                            std::to_string(row.size()));
        }
        records.push_back({row[0], row[1]});
    }
    return records;
}

Partition load_partition_csv(const std::filesystem::path& path,
                             const TradeGraph& graph,
                             const std::string& baseline,
                             LoadReport* report) {
    return load_partition(parse_partition_csv(path), graph, baseline, report);
}

} // namespace tradenet
