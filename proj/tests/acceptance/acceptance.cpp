// Release gate for the library and CLI. Each check prints a single
// PASS/FAIL line and the process exits nonzero if any check fails.
//
// The reference implementations come from the shared test-support library
// (triple loops, histogram formulas, an independent Newton solver); the two
// workflow checks run the real binary named by TRADENET_CLI against the
// bundled inputs in TRADENET_FIXTURES.
#include "generators.hpp"
#include "json.hpp"
#include "oracles.hpp"

#include "tradenet/backbone.hpp"
#include "tradenet/brokerage.hpp"
#include "tradenet/core_periphery.hpp"
#include "tradenet/csv.hpp"
#include "tradenet/descriptives.hpp"
#include "tradenet/ergm.hpp"
#include "tradenet/null_models.hpp"
#include "tradenet/reports.hpp"
#include "tradenet/significance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace tradenet;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CheckContext {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool condition, const std::string& what) {
        if (condition) return;
        ok = false;
        if (notes.size() < 8) notes.push_back(what);
    }
    void expect_near(double lhs, double rhs, double tol, const std::string& what) {
        expect(std::isfinite(lhs) && std::abs(lhs - rhs) <= tol,
               what + " (" + std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TradeGraph scale_weights(const TradeGraph& g, double c) {
    auto records = g.to_records();
    for (auto& r : records) r.weight *= c;
    return TradeGraph::over_nodes(g.node_labels(), records);
}

std::string serialize(const std::vector<TradeGraph>& samples) {
    std::string out;
    for (const auto& s : samples) {
        for (const auto& [i, j, w] : s.edges()) {
            out += std::to_string(i) + ">" + std::to_string(j) + ":" + std::to_string(w) + ";";
        }
        out += "|";
    }
    return out;
}

// ---- check 1 -------------------------------------------------------------

void check_brokerage(CheckContext& c) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> size_dist(3, 25), group_dist(3, 5);
    std::uniform_real_distribution<double> p_dist(0.05, 0.3);

    for (int trial = 0; trial < 100; ++trial) {
        auto g = testgen::random_digraph(size_dist(rng), p_dist(rng), rng);
        auto part = testgen::random_partition(g, group_dist(rng), rng);
        auto census = brokerage_census(g, part);
        auto ref = oracle::brokerage(g, part);

        std::array<std::int64_t, kRoleCount> columns{};
        std::int64_t grand = 0;
        for (size_t v = 0; v < g.node_count(); ++v) {
            c.expect(census.per_node[v].roles == ref[v].roles,
                     "role counts diverge from the reference census");
            c.expect(census.per_node[v].total == ref[v].total, "per-node total diverges");

            std::int64_t reciprocated = 0;
            for (const auto& [u, w] : g.out_neighbors(static_cast<int>(v))) {
                if (g.has_edge(u, static_cast<int>(v))) ++reciprocated;
            }
            auto d_in = static_cast<std::int64_t>(g.degree(static_cast<int>(v), Direction::in));
            auto d_out = static_cast<std::int64_t>(g.degree(static_cast<int>(v), Direction::out));
            std::int64_t role_sum = 0;
            for (auto count : census.per_node[v].roles) role_sum += count;
            c.expect(role_sum == census.per_node[v].total, "role counts do not sum to the total");
            c.expect(census.per_node[v].total == d_in * d_out - reciprocated,
                     "per-node total != d_in*d_out - reciprocated partners");

            for (size_t role = 0; role < kRoleCount; ++role) {
                columns[role] += census.per_node[v].roles[role];
            }
            grand += census.per_node[v].total;
        }
        c.expect(census.network_totals == columns, "network totals are not the column sums");
        c.expect(census.network_total == grand, "network grand total mismatch");
        if (!c.ok) return;
    }
    c.expect(seconds_since(start) < 5.0, "census sweep exceeded 5 s");
}

// ---- check 2 -------------------------------------------------------------

void check_backbone(CheckContext& c) {
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<int> size_dist(2, 50);
    std::uniform_real_distribution<double> p_dist(0.05, 0.5);
    const std::vector<double> levels = {0.01, 0.05, 0.1, 0.5};

    for (int trial = 0; trial < 100; ++trial) {
        auto g = testgen::random_digraph(size_dist(rng), p_dist(rng), rng,
                                         /*unit_weights=*/false);
        if (g.edge_count() == 0) continue;
        auto ref = oracle::backbone_alphas(g);

        std::set<std::pair<int, int>> previous;
        for (size_t level = 0; level < levels.size(); ++level) {
            auto result = disparity_filter(g, levels[level]);
            std::set<std::pair<int, int>> expected;
            for (const auto& [edge, alphas] : ref) {
                if (std::min(alphas.from_source, alphas.from_target) < levels[level]) {
                    expected.insert(edge);
                }
            }
            c.expect(result.retained == expected,
                     "retention disagrees with the per-edge formula at alpha " +
                         std::to_string(levels[level]));
            if (level > 0) {
                c.expect(std::includes(result.retained.begin(), result.retained.end(),
                                       previous.begin(), previous.end()),
                         "retained sets are not nested as alpha grows");
            }
            previous = std::move(result.retained);
        }
        if (!c.ok) return;
    }

    // Dense timing case: a complete 500-node weighted digraph.
    std::vector<EdgeRecord> records;
    auto names = testgen::node_names(500);
    std::uniform_real_distribution<double> weight(0.5, 40.0);
    for (int i = 0; i < 500; ++i) {
        for (int j = 0; j < 500; ++j) {
            if (i != j) {
                records.push_back({names[static_cast<size_t>(i)],
                                   names[static_cast<size_t>(j)], weight(rng)});
            }
        }
    }
    auto dense = TradeGraph::over_nodes(names, records);
    auto start = std::chrono::steady_clock::now();
    auto filtered = disparity_filter(dense, 0.05);
    c.expect(seconds_since(start) < 1.0, "dense 500-node filter exceeded 1 s");
    c.expect(filtered.edge_scores.size() == dense.edge_count(), "dense filter lost edges");
}

// ---- check 3 -------------------------------------------------------------

void check_descriptives(CheckContext& c) {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<int> size_dist(2, 30), group_dist(2, 5);
    std::uniform_real_distribution<double> p_dist(0.05, 0.5);

    int done = 0;
    while (done < 100) {
        auto g = testgen::random_digraph(size_dist(rng), p_dist(rng), rng);
        auto part = testgen::random_partition(g, group_dist(rng), rng);
        if (g.edge_count() == 0) continue;
        bool crossing = false;
        for (const auto& [i, j, w] : g.edges()) {
            if (part.group(i) != part.group(j)) crossing = true;
        }
        if (!crossing) continue;

        auto report = describe(g, part);
        c.expect_near(report.density, oracle::density(g), 1e-12, "density");
        c.expect_near(report.reciprocity, oracle::reciprocity(g), 1e-12, "reciprocity");
        c.expect_near(report.in_centralisation, oracle::centralisation(g, Direction::in),
                      1e-12, "in-centralisation");
        c.expect_near(report.out_centralisation, oracle::centralisation(g, Direction::out),
                      1e-12, "out-centralisation");
        c.expect_near(report.regional_assortativity, oracle::assortativity(g, part), 1e-12,
                      "assortativity");

        auto ei = ei_index(g, part);
        auto ref = oracle::ei_per_node(g, part);
        c.expect_near(ei.global, oracle::ei_global(g, part), 1e-12, "global E-I");
        for (size_t v = 0; v < g.node_count(); ++v) {
            c.expect(ei.per_node[v].has_value() == ref[v].has_value(),
                     "E-I definedness differs");
            if (ei.per_node[v] && ref[v]) {
                c.expect_near(*ei.per_node[v], *ref[v], 1e-12, "per-node E-I");
            }
        }
        if (!c.ok) return;
        ++done;
    }

    // Boundary cases must be exact.
    auto in_star = testgen::graph_from_triples({{"s1", "hub", 1.0},
                                                {"s2", "hub", 1.0},
                                                {"s3", "hub", 1.0},
                                                {"s4", "hub", 1.0},
                                                {"s5", "hub", 1.0}});
    c.expect(degree_centralisation(in_star, Direction::in) == 1.0,
             "in-star centralisation is not exactly 1");

    auto cross = testgen::graph_from_triples({{"a", "c", 1.0},
                                              {"a", "d", 1.0},
                                              {"b", "c", 1.0},
                                              {"b", "d", 1.0},
                                              {"c", "a", 1.0},
                                              {"c", "b", 1.0},
                                              {"d", "a", 1.0},
                                              {"d", "b", 1.0}});
    auto cross_part = testgen::partition_from_pairs(
        cross, {{"a", "left"}, {"b", "left"}, {"c", "right"}, {"d", "right"}});
    c.expect(categorical_assortativity(cross, cross_part) == -1.0,
             "balanced all-crossing partition is not exactly -1");
}

// ---- check 4 -------------------------------------------------------------

void check_rich_core(CheckContext& c) {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> size_dist(1, 40);
    std::uniform_real_distribution<double> p_dist(0.05, 0.4);

    for (int trial = 0; trial < 100; ++trial) {
        auto g = testgen::random_digraph(size_dist(rng), p_dist(rng), rng,
                                         /*unit_weights=*/false);
        auto split = rich_core(g);
        auto ref = oracle::rich_core(g);
        c.expect(split.ranking == ref.ranking, "strength ranking diverges");
        c.expect(split.r_star == ref.r_star, "r* diverges from brute force");
        c.expect(split.sigma_plus.size() == ref.sigma_plus.size(), "sigma+ length");
        for (size_t r = 0; r < ref.sigma_plus.size(); ++r) {
            c.expect_near(split.sigma_plus[r], ref.sigma_plus[r], 1e-12, "sigma+ value");
        }

        for (double scale : {0.5, 3.0}) {
            auto rescaled = rich_core(scale_weights(g, scale));
            c.expect(rescaled.core == split.core && rescaled.r_star == split.r_star,
                     "core membership changed under weight scaling");
        }
        if (!c.ok) return;
    }
}

// ---- check 5 -------------------------------------------------------------

void check_degree_null(CheckContext& c) {
    std::mt19937_64 rng(505);
    auto g = testgen::random_digraph(50, 0.1, rng);
    RewireConfig config;
    config.samples = 1000;
    config.seed = 909;

    auto start = std::chrono::steady_clock::now();
    auto ensemble = degree_preserving_sample(g, config);
    double elapsed = seconds_since(start);

    c.expect(ensemble.size() == 1000, "ensemble size");
    for (const auto& sample : ensemble) {
        c.expect(sample.node_count() == g.node_count(), "node set changed");
        c.expect(sample.edge_count() == g.edge_count(), "edge count changed");
        for (size_t v = 0; v < g.node_count(); ++v) {
            int node = static_cast<int>(v);
            if (sample.degree(node, Direction::in) != g.degree(node, Direction::in) ||
                sample.degree(node, Direction::out) != g.degree(node, Direction::out)) {
                c.expect(false, "degree sequence not preserved");
                return;
            }
        }
        for (const auto& record : sample.to_records()) {
            if (record.source == record.target) {
                c.expect(false, "self loop in a sample");
                return;
            }
        }
    }

    auto replay = degree_preserving_sample(g, config);
    c.expect(serialize(replay) == serialize(ensemble),
             "fixed seed did not reproduce the ensemble");
    c.expect(elapsed < 10.0, "1000-sample run exceeded 10 s");
}

// ---- check 6 -------------------------------------------------------------

void check_ergm_analytics(CheckContext& c) {
    std::mt19937_64 rng(606);

    // Edges-only pseudo-likelihood has the closed form logit(density).
    for (int trial = 0; trial < 5; ++trial) {
        std::uniform_int_distribution<int> size_dist(10, 30);
        std::uniform_real_distribution<double> p_dist(0.1, 0.4);
        auto g = testgen::random_digraph(size_dist(rng), p_dist(rng), rng);
        if (g.edge_count() == 0) continue;
        ModelSpec model;
        model.terms = {TermSpec{TermKind::edges}};
        model.node_labels = g.node_labels();
        auto fit = fit_mple(g, model);
        double d = density(g);
        c.expect_near(fit.coefficients[0], std::log(d / (1.0 - d)), 1e-6,
                      "edges-only estimate vs logit(density)");
    }

    // Change statistics against whole-graph recomputation, every term kind.
    for (bool literal : {false, true}) {
        auto g = testgen::random_digraph(20, 0.15, rng);
        auto part = testgen::random_partition(g, 4, rng);
        ModelSpec model;
        for (TermKind kind : {TermKind::edges, TermKind::mutual, TermKind::gwodegree,
                              TermKind::gwidegree, TermKind::gwesp, TermKind::gwdsp,
                              TermKind::sender_factor, TermKind::receiver_factor}) {
            TermSpec term;
            term.kind = kind;
            term.literal = literal && is_gw_term(kind);
            model.terms.push_back(term);
        }
        model.node_labels = g.node_labels();
        model.partition = part;

        auto labels = g.node_labels();
        std::uniform_int_distribution<int> node_dist(0, static_cast<int>(labels.size()) - 1);
        for (int toggle = 0; toggle < 200; ++toggle) {
            int i = node_dist(rng), j = node_dist(rng);
            if (i == j) {
                --toggle;
                continue;
            }
            auto records = g.to_records();
            std::erase_if(records, [&](const EdgeRecord& r) {
                return r.source == labels[static_cast<size_t>(i)] &&
                       r.target == labels[static_cast<size_t>(j)];
            });
            auto without = TradeGraph::over_nodes(labels, records);
            records.push_back({labels[static_cast<size_t>(i)],
                               labels[static_cast<size_t>(j)], 1.0});
            auto with = TradeGraph::over_nodes(labels, records);

            auto lo = global_statistics(without, model);
            auto hi = global_statistics(with, model);
            auto delta = change_statistics(g, i, j, model);
            for (size_t k = 0; k < delta.size(); ++k) {
                c.expect_near(delta[k], hi[k] - lo[k], 1e-9,
                              "change statistic " + model.statistic_names()[k]);
            }
            if (!c.ok) return;
        }
    }

    // Dyad-independent model vs a per-dyad logistic MLE solved separately.
    auto g = testgen::random_digraph(10, 0.3, rng);
    auto part = testgen::random_partition(g, 3, rng);
    ModelSpec model;
    model.terms = {TermSpec{TermKind::edges}, TermSpec{TermKind::sender_factor},
                   TermSpec{TermKind::receiver_factor}};
    model.node_labels = g.node_labels();
    model.partition = part;

    std::vector<std::vector<double>> X;
    std::vector<int> y;
    int n = static_cast<int>(g.node_count());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<double> row = {1.0};
            for (int label = 0; label < static_cast<int>(part.label_count()); ++label) {
                if (label == part.baseline) continue;
                row.push_back(part.group(i) == label ? 1.0 : 0.0);
            }
            for (int label = 0; label < static_cast<int>(part.label_count()); ++label) {
                if (label == part.baseline) continue;
                row.push_back(part.group(j) == label ? 1.0 : 0.0);
            }
            X.push_back(std::move(row));
            y.push_back(g.has_edge(i, j) ? 1 : 0);
        }
    }
    auto reference = oracle::logit_mle(X, y);
    auto fit = fit_mple(g, model);
    c.expect(fit.coefficients.size() == reference.size(), "coefficient count");
    for (size_t k = 0; k < reference.size(); ++k) {
        c.expect_near(fit.coefficients[k], reference[k], 1e-4,
                      "dyad-independent estimate " + fit.names[k]);
    }
}

// ---- check 7 -------------------------------------------------------------

void check_simulation(CheckContext& c) {
    ModelSpec model;
    model.terms = {TermSpec{TermKind::edges}};
    model.node_labels = testgen::node_names(50);
    std::vector<double> theta = {std::log(0.1 / 0.9)};
    auto initial = TradeGraph::over_nodes(model.node_labels, {});

    SimulationConfig config;
    config.samples = 500;
    config.seed = 777;

    auto start = std::chrono::steady_clock::now();
    auto result = simulate_ensemble(model, theta, initial, config);
    double elapsed = seconds_since(start);

    c.expect(result.samples.size() == 500, "sample count");
    double mean_density = 0.0;
    for (double d : result.densities) mean_density += d;
    mean_density /= 500.0;
    double var_density = 0.0;
    for (double d : result.densities) {
        var_density += (d - mean_density) * (d - mean_density);
    }
    var_density /= 499.0;
    double se_density = std::sqrt(var_density / 500.0);
    c.expect(std::abs(mean_density - 0.1) < 3.0 * se_density,
             "mean density " + std::to_string(mean_density) + " is off 0.1 by more than 3 SE");

    std::vector<double> recips;
    for (const auto& sample : result.samples) {
        if (sample.edge_count() > 0) recips.push_back(reciprocity(sample));
    }
    c.expect(recips.size() == 500, "empty sample in a density-0.1 ensemble");
    double mean_r = 0.0;
    for (double r : recips) mean_r += r;
    mean_r /= static_cast<double>(recips.size());
    double var_r = 0.0;
    for (double r : recips) var_r += (r - mean_r) * (r - mean_r);
    var_r /= static_cast<double>(recips.size() - 1);
    double se_r = std::sqrt(var_r / static_cast<double>(recips.size()));
    c.expect(std::abs(mean_r - 0.1) < 3.0 * se_r,
             "mean reciprocity " + std::to_string(mean_r) + " is off 0.1 by more than 3 SE");

    // Chains are independent per sample index, so a 50-sample rerun must
    // reproduce the first 50 samples bit for bit.
    SimulationConfig small = config;
    small.samples = 50;
    auto replay = simulate_ensemble(model, theta, initial, small);
    for (size_t k = 0; k < 50; ++k) {
        c.expect(replay.densities[k] == result.densities[k] &&
                     replay.samples[k].equivalent_to(result.samples[k]),
                 "fixed seed did not reproduce sample " + std::to_string(k));
    }
    c.expect(elapsed < 60.0, "500-sample simulation exceeded 60 s");
}

// ---- check 8 -------------------------------------------------------------

void check_zscores(CheckContext& c) {
    auto z = z_score(10.0, {4.0, 6.0, 8.0});
    c.expect(z.has_value() && *z == 2.0, "hand example (10 vs 4,6,8) must give exactly 2");
    c.expect(classify(z) == Significance::not_significant,
             "|Z| = 2 must not be significant (strict threshold)");

    auto centered = z_score(6.0, {4.0, 6.0, 8.0});
    c.expect(centered.has_value() && *centered == 0.0, "center value must give Z = 0");

    auto degenerate = z_score(5.0, {5.0, 5.0, 5.0});
    c.expect(!degenerate.has_value(), "zero-variance ensemble must be flagged");
    c.expect(classify(degenerate) == Significance::degenerate, "degenerate classification");

    c.expect(classify(2.0000001) == Significance::motif, "just above 2 is a motif");
    c.expect(classify(-2.0000001) == Significance::anti_motif, "just below -2 is an anti-motif");
    c.expect(classify(1.9999999) == Significance::not_significant, "just under 2");
    c.expect(classify(-2.0) == Significance::not_significant, "-2 exactly is not significant");
}

// ---- checks 9 and 10 -----------------------------------------------------

struct CliRun {
    fs::path out_dir;
    int exit_code = -1;
    std::string log;
};

CliRun run_pipeline_fixture(CheckContext& c, const std::string& config_name,
                            const std::string& work_name) {
    CliRun run;
    const char* cli = std::getenv("TRADENET_CLI");
    const char* fixtures = std::getenv("TRADENET_FIXTURES");
    c.expect(cli != nullptr, "TRADENET_CLI is not set");
    c.expect(fixtures != nullptr, "TRADENET_FIXTURES is not set");
    if (!cli || !fixtures) return run;

    auto work = fs::temp_directory_path() / "tradenet_acceptance" / work_name;
    fs::remove_all(work);
    fs::create_directories(work);
    run.out_dir = work / "out";

    // Reuse the committed config but point it at absolute paths and a
    // scratch output directory.
    auto config = json::parse(slurp(fs::path(fixtures) / config_name));
    config["edges"] = (fs::path(fixtures) / config["edges"].get<std::string>()).string();
    config["partition"] =
        (fs::path(fixtures) / config["partition"].get<std::string>()).string();
    config["output_dir"] = run.out_dir.string();
    auto config_path = work / "config.json";
    std::ofstream(config_path) << config.dump(2) << "\n";

    auto log_path = work / "run.log";
    std::string command = std::string(cli) + " pipeline run --config " + config_path.string() +
                          " >" + log_path.string() + " 2>&1";
    int status = std::system(command.c_str());
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.log = slurp(log_path);
    return run;
}

const std::vector<std::string> kArtifacts = {
    "backbone.csv",   "backbone_scores.csv", "descriptives.json", "ei.csv",
    "core.csv",       "brokerage.csv",       "ergm_fit.json",     "zscores.json",
    "z_plotdata.csv", "z_percountry.csv"};

void check_workflow(CheckContext& c) {
    auto start = std::chrono::steady_clock::now();
    auto run = run_pipeline_fixture(c, "synthetic60_config.json", "synthetic60");
    if (!c.ok) return;
    c.expect(run.exit_code == 0, "pipeline exited " + std::to_string(run.exit_code) +
                                     "\n" + run.log);
    if (run.exit_code != 0) return;
    c.expect(seconds_since(start) < 300.0, "workflow exceeded 5 minutes");

    for (const auto& name : kArtifacts) {
        c.expect(fs::exists(run.out_dir / name), name + " was not written");
    }
    c.expect(fs::exists(run.out_dir / "manifest.json"), "manifest.json missing");
    if (!c.ok) return;

    auto stats = json::parse(slurp(run.out_dir / "descriptives.json"));
    double assortativity = stats["summary"]["regional_assortativity"].get<double>();
    c.expect(assortativity > 0.3, "planted assortativity " + std::to_string(assortativity) +
                                      " is not above 0.3");

    // Independent verification: reload the backbone and the region file and
    // recompute assortativity and the E-I scores with the reference code.
    const char* fixtures = std::getenv("TRADENET_FIXTURES");
    auto backbone = load_edge_list_csv(run.out_dir / "backbone.csv");
    auto partition = load_partition_csv(fs::path(fixtures) / "synthetic60_partition.csv",
                                        backbone, "R1");
    c.expect_near(oracle::assortativity(backbone, partition), assortativity, 1e-12,
                  "assortativity in descriptives.json vs reference recomputation");

    auto ref_ei = oracle::ei_per_node(backbone, partition);
    size_t negative = 0, defined = 0;
    for (const auto& value : ref_ei) {
        if (!value) continue;
        ++defined;
        if (*value < 0.0) ++negative;
    }
    c.expect(defined > 0 && negative * 2 > backbone.node_count(),
             "planted structure did not give majority-negative E-I scores");

    // The emitted ei.csv must agree with the recomputation, row by row.
    std::istringstream ei_lines(slurp(run.out_dir / "ei.csv"));
    std::string line;
    std::getline(ei_lines, line);
    c.expect(line == "node,region,internal,external,ei", "ei.csv header");
    std::set<std::string> seen;
    while (std::getline(ei_lines, line)) {
        auto fields = csv::split_line(line);
        if (fields.size() != 5) {
            c.expect(false, "ei.csv row shape");
            return;
        }
        c.expect(seen.insert(fields[0]).second, "duplicate node in ei.csv");
        auto node = static_cast<size_t>(backbone.require_index(fields[0]));
        if (fields[4].empty()) {
            c.expect(!ref_ei[node].has_value(), "ei.csv empty score for a non-isolate");
        } else {
            double value = 0.0;
            c.expect(csv::parse_double(fields[4], value) && ref_ei[node].has_value() &&
                         std::abs(value - *ref_ei[node]) <= 1e-12,
                     "ei.csv score differs from the reference recomputation");
        }
    }
    c.expect(seen.size() == backbone.node_count(), "ei.csv row count");
}

void check_format_conformance(CheckContext& c) {
    auto run = run_pipeline_fixture(c, "sevenregion_config.json", "sevenregion");
    if (!c.ok) return;
    c.expect(run.exit_code == 0, "pipeline exited " + std::to_string(run.exit_code) +
                                     "\n" + run.log);
    if (run.exit_code != 0) return;

    auto stats = json::parse(slurp(run.out_dir / "descriptives.json"));
    const auto& summary = stats["summary"];
    c.expect(summary.size() == 6, "summary must hold exactly six statistics");
    for (const char* key : {"size", "density", "reciprocity", "in_centralisation",
                            "out_centralisation", "regional_assortativity"}) {
        c.expect(summary.contains(key), std::string("summary lacks ") + key);
    }

    auto fit_file = read_fit_json(run.out_dir / "ergm_fit.json");
    const auto& fit = fit_file.fit;
    c.expect(fit.names.size() == 18, "expected 18 coefficients, got " +
                                         std::to_string(fit.names.size()));
    c.expect(fit.coefficients.size() == fit.names.size() &&
                 fit.standard_errors.size() == fit.names.size(),
             "coefficient/SE vectors are not aligned");

    const std::vector<std::string> structural = {"edges",     "mutual", "gwodegree",
                                                 "gwidegree", "gwesp",  "gwdsp"};
    size_t senders = 0, receivers = 0;
    for (const auto& name : fit.names) {
        if (name.rfind("sender(", 0) == 0) ++senders;
        if (name.rfind("receiver(", 0) == 0) ++receivers;
    }
    for (const auto& name : structural) {
        c.expect(std::find(fit.names.begin(), fit.names.end(), name) != fit.names.end(),
                 "missing structural coefficient " + name);
    }
    c.expect(senders == 6, "expected 6 exporter-region coefficients");
    c.expect(receivers == 6, "expected 6 importer-region coefficients");

    for (size_t k = 0; k < fit.names.size(); ++k) {
        c.expect(std::isfinite(fit.coefficients[k]), fit.names[k] + " coefficient not finite");
        c.expect(std::isfinite(fit.standard_errors[k]) && fit.standard_errors[k] > 0.0,
                 fit.names[k] + " standard error not positive");
    }
}

} // namespace

int main() {
    struct Gate {
        int id;
        const char* label;
        std::function<void(CheckContext&)> body;
    };
    const std::vector<Gate> gates = {
        {1, "brokerage census equals the triple-loop reference", check_brokerage},
        {2, "disparity filter matches the per-edge formula and nests", check_backbone},
        {3, "descriptive statistics match direct recomputation", check_descriptives},
        {4, "rich-core split matches brute force, invariant to scale", check_rich_core},
        {5, "degree-preserving ensemble exact, simple, reproducible", check_degree_null},
        {6, "ERGM estimates and change statistics match references", check_ergm_analytics},
        {7, "edges-only simulation reproduces Bernoulli behaviour", check_simulation},
        {8, "z-score arithmetic, degeneracy, and strict thresholds", check_zscores},
        {9, "bundled 60-node workflow recovers the planted structure", check_workflow},
        {10, "seven-region run emits six statistics and 18 terms", check_format_conformance},
    };

    std::printf("tradenet release gate\n");
    int failures = 0;
    for (const auto& gate : gates) {
        CheckContext c;
        auto start = std::chrono::steady_clock::now();
        try {
            gate.body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("unexpected exception: ") + e.what());
        }
        double elapsed = seconds_since(start);
        std::printf("[%2d] %-58s %s (%.1f s)\n", gate.id, gate.label,
                    c.ok ? "PASS" : "FAIL", elapsed);
        if (!c.ok) {
            ++failures;
            for (const auto& note : c.notes) {
                std::printf("     - %s\n", note.c_str());
            }
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %zu checks passed\n", gates.size());
        return 0;
    }
    std::printf("%d of %zu checks FAILED\n", failures, gates.size());
    return 1;
}
