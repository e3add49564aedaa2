#include "ergm_engine.hpp"

#include "tradenet/errors.hpp"

#include <array>
#include <cmath>
#include <set>

namespace tradenet {

namespace {

const std::array<std::string, 8> kTermNames = {
    "edges",     "mutual", "gwodegree",     "gwidegree",
    "gwesp",     "gwdsp",  "sender_factor", "receiver_factor",
};

} // namespace

const std::string& term_kind_name(TermKind kind) {
    return kTermNames[static_cast<size_t>(kind)];
}

TermKind parse_term_kind(const std::string& name) {
    for (size_t i = 0; i < kTermNames.size(); ++i) {
        if (kTermNames[i] == name) return static_cast<TermKind>(i);
    }
    throw ConfigError("unknown ERGM term kind: " + name);
}

bool is_gw_term(TermKind kind) {
    return kind == TermKind::gwodegree || kind == TermKind::gwidegree ||
           kind == TermKind::gwesp || kind == TermKind::gwdsp;
}

bool is_factor_term(TermKind kind) {
    return kind == TermKind::sender_factor || kind == TermKind::receiver_factor;
}

std::vector<std::string> ModelSpec::statistic_names() const {
    std::vector<std::string> names;
    for (const auto& term : terms) {
        if (!is_factor_term(term.kind)) {
            names.push_back(term_kind_name(term.kind));
            continue;
        }
        if (!partition) {
            throw ConfigError("term '" + term_kind_name(term.kind) +
                              "' needs a partition bound to the model");
        }
        const char* prefix = term.kind == TermKind::sender_factor ? "sender" : "receiver";
        for (size_t g = 0; g < partition->labels.size(); ++g) {
            if (static_cast<int>(g) == partition->baseline) continue;
            names.push_back(std::string(prefix) + "(" + partition->labels[g] + ")");
        }
    }
    return names;
}

std::size_t ModelSpec::statistic_count() const { return statistic_names().size(); }

namespace detail {

void require_bound(const ModelSpec& model, const std::vector<std::string>& node_labels) {
    if (model.node_labels != node_labels) {
        throw ConfigError("model is bound to a different node set than this graph");
    }
}

CompiledModel compile_model(const ModelSpec& model, int node_count) {
    if (model.terms.empty()) {
        throw ConfigError("model has no terms");
    }
    std::set<TermKind> seen;
    for (const auto& term : model.terms) {
        if (!seen.insert(term.kind).second) {
            throw ConfigError("duplicate term kind: " + term_kind_name(term.kind));
        }
        if (is_gw_term(term.kind) && term.decay < 0.0) {
            throw ConfigError("negative decay on term " + term_kind_name(term.kind));
        }
    }

    CompiledModel compiled;
    compiled.n = node_count;
    compiled.names = model.statistic_names();
    if (model.partition) {
        if (model.partition->group_of.size() != static_cast<size_t>(node_count)) {
            throw ConfigError("partition does not cover the model's node set");
        }
        compiled.partition = &*model.partition;
    }

    for (const auto& term : model.terms) {
        if (is_factor_term(term.kind)) {
            if (!compiled.partition) {
                throw ConfigError("term '" + term_kind_name(term.kind) +
                                  "' needs a partition bound to the model");
            }
            for (size_t g = 0; g < compiled.partition->labels.size(); ++g) {
                if (static_cast<int>(g) == compiled.partition->baseline) continue;
                CompiledStat stat;
                stat.kind = term.kind;
                stat.label = static_cast<int>(g);
                compiled.stats.push_back(std::move(stat));
            }
            continue;
        }
        CompiledStat stat;
        stat.kind = term.kind;
        stat.literal = term.literal;
        if (is_gw_term(term.kind)) {
            stat.decay = term.decay;
            stat.scale = std::exp(term.decay);
            double u = 1.0 - std::exp(-term.decay);
            stat.upow.resize(static_cast<size_t>(node_count) + 2);
            stat.upow[0] = 1.0;
            for (size_t k = 1; k < stat.upow.size(); ++k) {
                stat.upow[k] = stat.upow[k - 1] * u;
            }
        }
        compiled.stats.push_back(std::move(stat));
    }
    return compiled;
}

namespace {

// e^{decay} * (1 - u^k): one ladder step of the geometrically weighted sums.
inline double gw_weight(const CompiledStat& s, int k) {
    return s.scale * (1.0 - s.upow[static_cast<size_t>(k)]);
}

double global_one(const DenseDigraph& g, const CompiledModel& m, const CompiledStat& s) {
    int n = g.node_count();
    switch (s.kind) {
        case TermKind::edges:
            return static_cast<double>(g.edge_count());
        case TermKind::mutual: {
            long long twice = 0;
            for (int i = 0; i < n; ++i) twice += g.shared_partners_otp(i, i);
            // out(i) ∩ in(i) = mutual partners of i; every pair counted twice.
            return static_cast<double>(twice) / 2.0;
        }
        case TermKind::gwodegree: {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += s.literal ? std::exp(-s.decay * g.out_degree(i))
                                 : gw_weight(s, g.out_degree(i));
            }
            return acc;
        }
        case TermKind::gwidegree: {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += s.literal ? std::exp(-s.decay * g.in_degree(i))
                                 : gw_weight(s, g.in_degree(i));
            }
            return acc;
        }
        case TermKind::gwesp: {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                g.for_each_out(i, [&](int j) {
                    acc += s.literal ? static_cast<double>(g.common_out(i, j))
                                     : gw_weight(s, g.shared_partners_otp(i, j));
                });
            }
            return acc;
        }
        case TermKind::gwdsp: {
            double acc = 0.0;
            if (s.literal) {
                for (int i = 0; i < n; ++i) {
                    double d = g.out_degree(i);
                    acc += d * (d - 1.0);
                }
                return acc;
            }
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    acc += gw_weight(s, g.shared_partners_otp(i, j));
                }
            }
            return acc;
        }
        case TermKind::sender_factor: {
            long long acc = 0;
            for (int i = 0; i < n; ++i) {
                if (m.partition->group(i) == s.label) acc += g.out_degree(i);
            }
            return static_cast<double>(acc);
        }
        case TermKind::receiver_factor: {
            long long acc = 0;
            for (int i = 0; i < n; ++i) {
                if (m.partition->group(i) == s.label) acc += g.in_degree(i);
            }
            return static_cast<double>(acc);
        }
    }
    return 0.0;
}

double change_one(const DenseDigraph& g, const CompiledModel& m, const CompiledStat& s,
                  int i, int j, int yij) {
    switch (s.kind) {
        case TermKind::edges:
            return 1.0;
        case TermKind::mutual:
            return g.has_edge(j, i) ? 1.0 : 0.0;
        case TermKind::gwodegree: {
            int d = g.out_degree(i) - yij;
            if (s.literal) return std::exp(-s.decay * (d + 1)) - std::exp(-s.decay * d);
            // gw_weight(d + 1) - gw_weight(d) telescopes to u^d.
            return s.upow[static_cast<size_t>(d)];
        }
        case TermKind::gwidegree: {
            int d = g.in_degree(j) - yij;
            if (s.literal) return std::exp(-s.decay * (d + 1)) - std::exp(-s.decay * d);
            return s.upow[static_cast<size_t>(d)];
        }
        case TermKind::gwesp: {
            if (s.literal) {
                // Triples gained: the tie can serve as base, first, or
                // second leg of y_ab y_ac y_bc.
                return static_cast<double>(g.common_out(i, j) + g.shared_partners_otp(i, j) +
                                           g.common_in(i, j));
            }
            // The new edge itself, at its (dyad-state-independent) count of
            // transitive shared partners...
            double acc = gw_weight(s, g.shared_partners_otp(i, j));
            // ...plus the existing edges whose count the tie raises by one:
            // (i,y) closed by i->j->y and (x,j) closed by x->i->j. Each
            // contributes u^{previous count}; the popcounts see the toggled
            // bit exactly when y_ij is set, hence the -yij correction.
            g.for_each_common(g.out_row(i), g.out_row(j), [&](int y) {
                acc += s.upow[static_cast<size_t>(g.shared_partners_otp(i, y) - yij)];
            });
            g.for_each_common(g.in_row(i), g.in_row(j), [&](int x) {
                acc += s.upow[static_cast<size_t>(g.shared_partners_otp(x, j) - yij)];
            });
            return acc;
        }
        case TermKind::gwdsp: {
            if (s.literal) return 2.0 * (g.out_degree(i) - yij);
            // Dyads (not edges) whose two-path count the tie raises: (i,y)
            // for every y->... reached via j, and (x,j) for every x feeding i.
            double acc = 0.0;
            g.for_each_out(j, [&](int y) {
                if (y == i) return;
                acc += s.upow[static_cast<size_t>(g.shared_partners_otp(i, y) - yij)];
            });
            g.for_each_in(i, [&](int x) {
                if (x == j) return;
                acc += s.upow[static_cast<size_t>(g.shared_partners_otp(x, j) - yij)];
            });
            return acc;
        }
        case TermKind::sender_factor:
            return m.partition->group(i) == s.label ? 1.0 : 0.0;
        case TermKind::receiver_factor:
            return m.partition->group(j) == s.label ? 1.0 : 0.0;
    }
    return 0.0;
}

} // namespace

void global_stats(const DenseDigraph& g, const CompiledModel& m, double* out) {
    for (size_t k = 0; k < m.stats.size(); ++k) {
        out[k] = global_one(g, m, m.stats[k]);
    }
}

void change_stats(const DenseDigraph& g, const CompiledModel& m, int i, int j, double* out) {
    int yij = g.has_edge(i, j) ? 1 : 0;
    for (size_t k = 0; k < m.stats.size(); ++k) {
        out[k] = change_one(g, m, m.stats[k], i, j, yij);
    }
}

} // namespace detail

std::vector<double> global_statistics(const TradeGraph& graph, const ModelSpec& model) {
    detail::require_bound(model, graph.node_labels());
    auto compiled = detail::compile_model(model, static_cast<int>(graph.node_count()));
    auto dense = DenseDigraph::from_graph(graph);
    std::vector<double> out(compiled.size());
    detail::global_stats(dense, compiled, out.data());
    return out;
}

std::vector<double> change_statistics(const TradeGraph& graph, int source, int target,
                                      const ModelSpec& model) {
    if (source == target) {
        throw DataError("change statistics need a dyad of distinct nodes");
    }
    auto n = static_cast<int>(graph.node_count());
    if (source < 0 || source >= n || target < 0 || target >= n) {
        throw DataError("dyad endpoint out of range");
    }
    detail::require_bound(model, graph.node_labels());
    auto compiled = detail::compile_model(model, n);
    auto dense = DenseDigraph::from_graph(graph);
    std::vector<double> out(compiled.size());
    detail::change_stats(dense, compiled, source, target, out.data());
    return out;
}

} // namespace tradenet
