#pragma once

#include "tradenet/dense_digraph.hpp"
#include "tradenet/ergm.hpp"

#include <vector>

namespace tradenet::detail {

// One expanded statistic: a term, plus the label index for factor terms
// and precomputed decay constants for gw terms. upow[k] = (1 - e^{-decay})^k.
struct CompiledStat {
    TermKind kind;
    double decay = 0.0;
    bool literal = false;
    int label = -1;
    double scale = 1.0; // e^{decay}
    std::vector<double> upow;
};

struct CompiledModel {
    std::vector<CompiledStat> stats;
    std::vector<std::string> names;
    const Partition* partition = nullptr;
    int n = 0;

    std::size_t size() const { return stats.size(); }
};

// Validates the term list (no duplicate kinds, nonnegative decay, factor
// terms need a partition covering n nodes) and expands factor terms over
// the non-baseline labels. The returned object borrows model.partition.
CompiledModel compile_model(const ModelSpec& model, int node_count);

// Throws ConfigError unless the model is bound to exactly this node set.
void require_bound(const ModelSpec& model, const std::vector<std::string>& node_labels);

void global_stats(const DenseDigraph& g, const CompiledModel& m, double* out);

// g(y_ij = 1) - g(y_ij = 0) for ordered dyad (i, j), independent of the
// dyad's current state in g; every other dyad is read from g.
void change_stats(const DenseDigraph& g, const CompiledModel& m, int i, int j, double* out);

} // namespace tradenet::detail
