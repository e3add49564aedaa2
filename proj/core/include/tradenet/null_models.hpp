#pragma once

#include "tradenet/dense_digraph.hpp"
#include "tradenet/graph.hpp"
#include "tradenet/rng.hpp"

#include <cstdint>
#include <vector>

namespace tradenet {

struct RewireConfig {
    int swaps_per_edge = 100;
    std::uint64_t seed = 0;
    int samples = 1000;
    int threads = 0; // 0 = auto
};

// Double-edge-swap chain on a binary copy of the graph. Each attempt draws
// two edge slots (a->b),(c->d); the attempt is discarded when the slots
// coincide, share an endpoint in a way that would create a loop or a
// parallel edge, or when (a->d) or (c->b) already exists. Otherwise the pair
// is rewired to (a->d),(c->b). In- and out-degrees are invariant throughout.
void rewire_in_place(DenseDigraph& graph,
                     std::vector<std::pair<int, int>>& edge_slots,
                     std::int64_t attempts, Rng& rng);

// Fixed-degree-sequence ensemble: sample k is produced by an independent
// chain of swaps_per_edge * |E| attempts from the (binarized) input, on the
// RNG stream derived from (seed, k). Samples carry unit weights.
std::vector<TradeGraph> degree_preserving_sample(const TradeGraph& graph,
                                                 const RewireConfig& config);

} // namespace tradenet
