#include "tradenet/null_models.hpp"

#include "tradenet/errors.hpp"
#include "tradenet/parallel.hpp"

namespace tradenet {

void rewire_in_place(DenseDigraph& graph,
                     std::vector<std::pair<int, int>>& edge_slots,
                     std::int64_t attempts, Rng& rng) {
    auto edges = static_cast<std::uint64_t>(edge_slots.size());
    if (edges < 2) return;
    for (std::int64_t t = 0; t < attempts; ++t) {
        auto i = static_cast<size_t>(rng.next_below(edges));
        auto j = static_cast<size_t>(rng.next_below(edges));
        auto [a, b] = edge_slots[i];
        auto [c, d] = edge_slots[j];
        if (a == c || b == d || a == d || c == b) continue;
        if (graph.has_edge(a, d) || graph.has_edge(c, b)) continue;
        graph.remove_edge(a, b);
        graph.remove_edge(c, d);
        graph.add_edge(a, d);
        graph.add_edge(c, b);
        edge_slots[i] = {a, d};
        edge_slots[j] = {c, b};
    }
}

std::vector<TradeGraph> degree_preserving_sample(const TradeGraph& graph,
                                                 const RewireConfig& config) {
    if (config.swaps_per_edge <= 0 || config.samples <= 0) {
        throw ConfigError("rewire settings must be positive");
    }
    // A single edge degrades gracefully: every attempt draws it twice and
    // is rejected, so all samples equal the input.
    if (graph.edge_count() == 0) {
        throw DataError("degree-preserving null needs at least 1 edge");
    }

    DenseDigraph base = DenseDigraph::from_graph(graph);
    std::vector<std::pair<int, int>> base_slots;
    base_slots.reserve(base.edge_count());
    for (const auto& [s, t] : base.edges()) base_slots.emplace_back(s, t);

    std::int64_t attempts = static_cast<std::int64_t>(config.swaps_per_edge) *
                            static_cast<std::int64_t>(base_slots.size());

    std::vector<TradeGraph> samples(static_cast<size_t>(config.samples));
    parallel_for(config.samples, resolve_threads(config.threads), [&](int k) {
        Rng rng(seeding::derive(config.seed, "degree-null", static_cast<std::uint64_t>(k)));
        DenseDigraph g = base;
        auto slots = base_slots;
        rewire_in_place(g, slots, attempts, rng);
        samples[static_cast<size_t>(k)] = g.to_graph(graph.node_labels());
    });
    return samples;
}

} // namespace tradenet
