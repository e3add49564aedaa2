#pragma once

#include "tradenet/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tradenet {

enum class TermKind {
    edges,
    mutual,
    gwodegree,
    gwidegree,
    gwesp,
    gwdsp,
    sender_factor,
    receiver_factor,
};

const std::string& term_kind_name(TermKind kind);
TermKind parse_term_kind(const std::string& name); // throws ConfigError
bool is_gw_term(TermKind kind);
bool is_factor_term(TermKind kind);

struct TermSpec {
    TermKind kind = TermKind::edges;
    // Geometric decay, gw terms only. The model reports single fixed-decay
    // coefficients; decays are configuration, not parameters.
    double decay = 0.5;
    // When set, gw terms use the simplified tabulated statistic instead of
    // the geometrically weighted form (kept for side-by-side comparison).
    bool literal = false;
};

/// A term list bound to a concrete node universe (and, for factor terms,
/// a partition with its baseline label). The statistic vector is the terms
/// in order, with each factor term expanded to one statistic per
/// non-baseline label.
struct ModelSpec {
    std::vector<TermSpec> terms;
    std::vector<std::string> node_labels;
    std::optional<Partition> partition;

    std::vector<std::string> statistic_names() const;
    std::size_t statistic_count() const;
};

// g(y) for the bound model. Statistic definitions: edges = |E|; mutual =
// reciprocated unordered pairs; gw-degree/gwesp/gwdsp are the geometrically
// weighted sums (decay fixed per term) over degree counts, edge-wise
// transitive shared partners, and dyad-wise transitive shared partners
// respectively; factor statistics count edges by endpoint label.
std::vector<double> global_statistics(const TradeGraph& graph, const ModelSpec& model);

// g(y with y_ij = 1) - g(y with y_ij = 0), all other dyads held at their
// state in `graph`. Computed incrementally; i == j is an error.
std::vector<double> change_statistics(const TradeGraph& graph, int source, int target,
                                      const ModelSpec& model);

struct ErgmFit {
    std::vector<std::string> names;
    std::vector<double> coefficients;
    std::vector<double> standard_errors;
    double pseudo_loglik = 0.0;
    double aic = 0.0;
    bool converged = false;
    int iterations = 0;
    // Estimation is maximum pseudo-likelihood; the reported uncertainties
    // inherit that approximation. Carried into every serialized fit.
    std::string caveat;
};

// Logistic regression of the dyad indicators on the change statistics
// (one observation per ordered dyad), Newton-Raphson with tolerance 1e-8
// on the max coefficient change, at most 50 iterations. Standard errors
// come from the inverse observed information.
ErgmFit fit_mple(const TradeGraph& graph, const ModelSpec& model);

struct SimulationConfig {
    int samples = 1000;
    std::int64_t burnin = -1;   // proposals before the sample; -1 = 20 * n(n-1)
    std::int64_t interval = -1; // further proposals per sample; -1 = n(n-1)
    std::uint64_t seed = 0;
    int threads = 0; // 0 = auto
};

struct SimulationResult {
    std::vector<TradeGraph> samples; // binary, node-aligned with the model
    std::vector<double> densities;   // per sample
    std::vector<std::string> warnings;
    std::int64_t burnin = 0;   // resolved values actually used
    std::int64_t interval = 0;
};

// Metropolis sampler over dyad toggles with a tie/no-tie proposal: with
// probability 1/2 a uniform existing edge is proposed for deletion,
// otherwise a uniform ordered dyad is toggled. Sample k is the state of an
// independent chain (RNG stream derived from (seed, k)) started at
// `initial` and run for burnin + interval proposals, so the ensemble is
// reproducible for a given seed regardless of worker count.
SimulationResult simulate_ensemble(const ModelSpec& model, const std::vector<double>& theta,
                                   const TradeGraph& initial, const SimulationConfig& config);

} // namespace tradenet
