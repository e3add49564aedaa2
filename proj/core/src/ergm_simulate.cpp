#include "ergm_engine.hpp"
#include "tradenet/errors.hpp"
#include "tradenet/parallel.hpp"
#include "tradenet/rng.hpp"

#include <cmath>
#include <string>

namespace tradenet {

namespace {

// Edge list with positional index: uniform pick, O(1) insert and remove.
class EdgeIndex {
public:
    explicit EdgeIndex(const DenseDigraph& g) : n_(g.node_count()), pos_(slot_count(), -1) {
        list_.reserve(static_cast<size_t>(g.edge_count()));
        for (const auto& [i, j] : g.edges()) insert(i, j);
    }

    size_t size() const { return list_.size(); }
    std::pair<int, int> at(size_t k) const { return list_[k]; }

    void insert(int i, int j) {
        pos_[slot(i, j)] = static_cast<int>(list_.size());
        list_.emplace_back(i, j);
    }

    void remove(int i, int j) {
        int k = pos_[slot(i, j)];
        auto last = list_.back();
        list_[static_cast<size_t>(k)] = last;
        pos_[slot(last.first, last.second)] = k;
        list_.pop_back();
        pos_[slot(i, j)] = -1;
    }

private:
    size_t slot(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
    }
    size_t slot_count() const { return static_cast<size_t>(n_) * static_cast<size_t>(n_); }

    int n_;
    std::vector<int> pos_;
    std::vector<std::pair<int, int>> list_;
};

} // namespace

SimulationResult simulate_ensemble(const ModelSpec& model, const std::vector<double>& theta,
                                   const TradeGraph& initial, const SimulationConfig& config) {
    detail::require_bound(model, initial.node_labels());
    auto n = static_cast<int>(initial.node_count());
    if (n < 2) {
        throw DataError("simulation needs at least 2 nodes");
    }
    auto compiled = detail::compile_model(model, n);
    if (theta.size() != compiled.size()) {
        throw ConfigError("theta has " + std::to_string(theta.size()) + " entries, model has " +
                          std::to_string(compiled.size()) + " statistics");
    }
    for (double t : theta) {
        if (!std::isfinite(t)) throw ConfigError("non-finite coefficient in theta");
    }
    if (config.samples <= 0) {
        throw ConfigError("sample count must be positive");
    }

    auto dyads = static_cast<std::int64_t>(n) * (n - 1);
    SimulationResult result;
    result.burnin = config.burnin >= 0 ? config.burnin : 20 * dyads;
    result.interval = config.interval >= 0 ? config.interval : dyads;
    std::int64_t proposals = result.burnin + result.interval;

    DenseDigraph base = DenseDigraph::from_graph(initial);
    result.samples.resize(static_cast<size_t>(config.samples));
    result.densities.resize(static_cast<size_t>(config.samples));

    parallel_for(config.samples, resolve_threads(config.threads), [&](int k) {
        Rng rng(seeding::derive(config.seed, "ergm-sim", static_cast<std::uint64_t>(k)));
        DenseDigraph g = base;
        EdgeIndex edges(g);
        std::vector<double> delta(compiled.size());

        for (std::int64_t t = 0; t < proposals; ++t) {
            int i, j;
            if (rng.next_bool()) {
                if (edges.size() == 0) continue; // nothing to delete: rejected no-op
                auto [a, b] = edges.at(static_cast<size_t>(
                    rng.next_below(static_cast<std::uint64_t>(edges.size()))));
                i = a;
                j = b;
            } else {
                auto u = rng.next_below(static_cast<std::uint64_t>(dyads));
                i = static_cast<int>(u / static_cast<std::uint64_t>(n - 1));
                auto r = static_cast<int>(u % static_cast<std::uint64_t>(n - 1));
                j = r < i ? r : r + 1;
            }

            bool removing = g.has_edge(i, j);
            detail::change_stats(g, compiled, i, j, delta.data());
            double lin = 0.0;
            for (size_t s = 0; s < delta.size(); ++s) lin += theta[s] * delta[s];

            auto e = static_cast<double>(g.edge_count());
            auto nd = static_cast<double>(dyads);
            double ratio;
            if (removing) {
                lin = -lin;
                ratio = e / (nd + e);
            } else {
                ratio = (nd + e + 1.0) / (e + 1.0);
            }
            double accept = std::exp(lin) * ratio;
            if (rng.next_double() < accept) {
                if (removing) {
                    g.remove_edge(i, j);
                    edges.remove(i, j);
                } else {
                    g.add_edge(i, j);
                    edges.insert(i, j);
                }
            }
        }

        result.samples[static_cast<size_t>(k)] = g.to_graph(initial.node_labels());
        result.densities[static_cast<size_t>(k)] =
            static_cast<double>(g.edge_count()) / static_cast<double>(dyads);
    });

    int degenerate = 0;
    for (double d : result.densities) {
        if (d < 0.01 || d > 0.99) ++degenerate;
    }
    if (degenerate > 0) {
        result.warnings.push_back(
            std::to_string(degenerate) + " of " + std::to_string(config.samples) +
            " samples have density outside [0.01, 0.99]; the model may be degenerate");
    }
    return result;
}

} // namespace tradenet
