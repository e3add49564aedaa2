#pragma once

#include "tradenet/graph.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace tradenet {

/// Mutable binary digraph over a fixed node set, stored as bit-adjacency
/// rows in both directions. This is the private per-worker representation
/// used by the samplers and the ERGM statistics: O(1) edge toggles and
/// word-parallel shared-partner counts. Suited to the node counts this
/// tool targets (hundreds, not millions).
class DenseDigraph {
public:
    explicit DenseDigraph(int n)
        : n_(n),
          words_(static_cast<size_t>((n + 63) / 64)),
          out_bits_(words_ * static_cast<size_t>(n), 0),
          in_bits_(words_ * static_cast<size_t>(n), 0),
          out_deg_(static_cast<size_t>(n), 0),
          in_deg_(static_cast<size_t>(n), 0) {}

    static DenseDigraph from_graph(const TradeGraph& g) {
        DenseDigraph d(static_cast<int>(g.node_count()));
        for (const auto& [i, j, w] : g.edges()) {
            d.add_edge(i, j);
        }
        return d;
    }

    int node_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    int out_degree(int i) const { return out_deg_[static_cast<size_t>(i)]; }
    int in_degree(int i) const { return in_deg_[static_cast<size_t>(i)]; }

    bool has_edge(int i, int j) const {
        return (out_row(i)[static_cast<size_t>(j) >> 6] >> (j & 63)) & 1ULL;
    }

    void add_edge(int i, int j) {
        out_row(i)[static_cast<size_t>(j) >> 6] |= 1ULL << (j & 63);
        in_row(j)[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63);
        ++out_deg_[static_cast<size_t>(i)];
        ++in_deg_[static_cast<size_t>(j)];
        ++edge_count_;
    }

    void remove_edge(int i, int j) {
        out_row(i)[static_cast<size_t>(j) >> 6] &= ~(1ULL << (j & 63));
        in_row(j)[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63));
        --out_deg_[static_cast<size_t>(i)];
        --in_deg_[static_cast<size_t>(j)];
        --edge_count_;
    }

    void toggle(int i, int j) {
        if (has_edge(i, j)) {
            remove_edge(i, j);
        } else {
            add_edge(i, j);
        }
    }

    // |out(i) ∩ in(j)|: transitive shared partners w with i->w and w->j.
    int shared_partners_otp(int i, int j) const { return intersect(out_row(i), in_row(j)); }
    int common_out(int i, int j) const { return intersect(out_row(i), out_row(j)); }
    int common_in(int i, int j) const { return intersect(in_row(i), in_row(j)); }

    template <class F>
    void for_each_out(int i, F&& f) const {
        scan(out_row(i), std::forward<F>(f));
    }
    template <class F>
    void for_each_in(int i, F&& f) const {
        scan(in_row(i), std::forward<F>(f));
    }

    // Nodes w with both i->w and j->w (out-row intersection), etc.
    template <class F>
    void for_each_common(const std::uint64_t* a, const std::uint64_t* b, F&& f) const {
        for (size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = a[w] & b[w];
            while (bits) {
                int bit = std::countr_zero(bits);
                f(static_cast<int>(w * 64) + bit);
                bits &= bits - 1;
            }
        }
    }

    const std::uint64_t* out_row(int i) const { return out_bits_.data() + words_ * static_cast<size_t>(i); }
    const std::uint64_t* in_row(int i) const { return in_bits_.data() + words_ * static_cast<size_t>(i); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> result;
        result.reserve(static_cast<size_t>(edge_count_));
        for (int i = 0; i < n_; ++i) {
            for_each_out(i, [&](int j) { result.emplace_back(i, j); });
        }
        return result;
    }

    // Binary TradeGraph (unit weights) over the given labels; isolates kept.
    TradeGraph to_graph(const std::vector<std::string>& labels) const {
        std::vector<EdgeRecord> records;
        records.reserve(static_cast<size_t>(edge_count_));
        for (const auto& [i, j] : edges()) {
            records.push_back({labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)], 1.0});
        }
        return TradeGraph::over_nodes(labels, records);
    }

private:
    std::uint64_t* out_row(int i) { return out_bits_.data() + words_ * static_cast<size_t>(i); }
    std::uint64_t* in_row(int i) { return in_bits_.data() + words_ * static_cast<size_t>(i); }

    int intersect(const std::uint64_t* a, const std::uint64_t* b) const {
        int count = 0;
        for (size_t w = 0; w < words_; ++w) {
            count += std::popcount(a[w] & b[w]);
        }
        return count;
    }

    template <class F>
    void scan(const std::uint64_t* row, F&& f) const {
        for (size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int bit = std::countr_zero(bits);
                f(static_cast<int>(w * 64) + bit);
                bits &= bits - 1;
            }
        }
    }

    int n_;
    size_t words_;
    std::vector<std::uint64_t> out_bits_;
    std::vector<std::uint64_t> in_bits_;
    std::vector<int> out_deg_;
    std::vector<int> in_deg_;
    long long edge_count_ = 0;
};

} // namespace tradenet
