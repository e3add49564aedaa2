// Microbenchmarks for the hot paths: backbone filtering, the brokerage
// census, null-model sampling, and the ERGM kernels. Run with
// --benchmark_filter=<regex> to narrow.
#include "tradenet/backbone.hpp"
#include "tradenet/brokerage.hpp"
#include "tradenet/ergm.hpp"
#include "tradenet/null_models.hpp"
#include "tradenet/rng.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

using namespace tradenet;

namespace {

std::vector<std::string> make_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
    return names;
}

TradeGraph random_graph(int n, double p, bool weighted, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> weight(0.5, 40.0);
    auto names = make_names(n);
    std::vector<EdgeRecord> records;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || coin(rng) >= p) continue;
            records.push_back({names[static_cast<size_t>(i)], names[static_cast<size_t>(j)],
                               weighted ? weight(rng) : 1.0});
        }
    }
    return TradeGraph::over_nodes(names, records);
}

Partition grouped(const TradeGraph& graph, int groups) {
    std::vector<PartitionRecord> records;
    auto labels = graph.node_labels();
    for (size_t i = 0; i < labels.size(); ++i) {
        records.push_back({labels[i], "g" + std::to_string(i % static_cast<size_t>(groups))});
    }
    return load_partition(records, graph);
}

void bm_disparity_filter_dense500(benchmark::State& state) {
    auto graph = random_graph(500, 0.5, true, 99);
    for (auto _ : state) {
        auto result = disparity_filter(graph, 0.05);
        benchmark::DoNotOptimize(result.retained.size());
    }
}
BENCHMARK(bm_disparity_filter_dense500)->Unit(benchmark::kMillisecond);

void bm_brokerage_census(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    auto graph = random_graph(n, 0.1, false, 7);
    auto partition = grouped(graph, 7);
    for (auto _ : state) {
        auto census = brokerage_census(graph, partition);
        benchmark::DoNotOptimize(census.network_total);
    }
}
BENCHMARK(bm_brokerage_census)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void bm_degree_null(benchmark::State& state) {
    auto graph = random_graph(50, 0.1, false, 13);
    RewireConfig config;
    config.samples = 100;
    config.seed = 4;
    config.threads = 1;
    for (auto _ : state) {
        auto samples = degree_preserving_sample(graph, config);
        benchmark::DoNotOptimize(samples.size());
    }
}
BENCHMARK(bm_degree_null)->Unit(benchmark::kMillisecond);

void bm_change_statistics(benchmark::State& state) {
    auto graph = random_graph(100, 0.1, false, 21);
    auto partition = grouped(graph, 7);
    ModelSpec model;
    model.terms = {TermSpec{TermKind::edges},     TermSpec{TermKind::mutual},
                   TermSpec{TermKind::gwodegree}, TermSpec{TermKind::gwidegree},
                   TermSpec{TermKind::gwesp},     TermSpec{TermKind::gwdsp},
                   TermSpec{TermKind::sender_factor},
                   TermSpec{TermKind::receiver_factor}};
    model.node_labels = graph.node_labels();
    model.partition = partition;
    Rng rng(seeding::derive(3, "bench", 0));
    for (auto _ : state) {
        int i = rng.next_int(100);
        int j = rng.next_int(99);
        if (j >= i) ++j;
        auto delta = change_statistics(graph, i, j, model);
        benchmark::DoNotOptimize(delta.data());
    }
}
BENCHMARK(bm_change_statistics);

void bm_ergm_simulation(benchmark::State& state) {
    auto graph = random_graph(50, 0.1, false, 17);
    ModelSpec model;
    model.terms = {TermSpec{TermKind::edges}, TermSpec{TermKind::mutual}};
    model.node_labels = graph.node_labels();
    std::vector<double> theta = {-2.1, 0.4};
    SimulationConfig config;
    config.samples = 20;
    config.seed = 5;
    config.threads = 1;
    for (auto _ : state) {
        auto result = simulate_ensemble(model, theta, graph, config);
        benchmark::DoNotOptimize(result.densities.data());
    }
}
BENCHMARK(bm_ergm_simulation)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
