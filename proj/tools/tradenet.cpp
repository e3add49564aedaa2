#include "tradenet/backbone.hpp"
#include "tradenet/brokerage.hpp"
#include "tradenet/core_periphery.hpp"
#include "tradenet/csv.hpp"
#include "tradenet/descriptives.hpp"
#include "tradenet/errors.hpp"
#include "tradenet/export.hpp"
#include "tradenet/null_models.hpp"
#include "tradenet/pipeline.hpp"
#include "tradenet/reports.hpp"
#include "tradenet/significance.hpp"
#include "tradenet/version.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace tradenet;

namespace {

Direction parse_direction(const std::string& name) {
    if (name == "total") return Direction::total;
    if (name == "in") return Direction::in;
    if (name == "out") return Direction::out;
    throw ConfigError("unknown strength direction: " + name + " (use total, in, or out)");
}

void write_samples(const std::vector<TradeGraph>& samples, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
    char name[32];
    for (size_t k = 0; k < samples.size(); ++k) {
        std::snprintf(name, sizeof(name), "sample_%04zu.csv", k);
        write_edge_list_csv(samples[k], dir / name);
    }
}

ModelSpec build_model(const TradeGraph& graph, const std::optional<Partition>& partition,
                      const std::vector<TermSpec>& terms) {
    ModelSpec model;
    model.terms = terms;
    model.node_labels = graph.node_labels();
    model.partition = partition;
    return model;
}

struct CommonInputs {
    std::string edges;
    std::string partition;
    std::string baseline;

    TradeGraph load_graph() const { return load_edge_list_csv(edges); }
    Partition load_part(const TradeGraph& graph) const {
        return load_partition_csv(partition, graph, baseline);
    }
};

void add_edges_option(CLI::App* cmd, CommonInputs& inputs) {
    cmd->add_option("--edges", inputs.edges, "edge list CSV (source,target,weight)")->required();
}

void add_partition_options(CLI::App* cmd, CommonInputs& inputs) {
    cmd->add_option("--partition", inputs.partition, "partition CSV (node,region)")->required();
    cmd->add_option("--baseline", inputs.baseline,
                    "baseline region label (default: first label in the file)");
}

// Help and version exit 0; anything else CLI11 rejects is a usage error,
// reported on the config-error exit code.
int dispatch(CLI::App& app, int argc, char** argv) {
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed weighted trade network analysis"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // backbone
    CommonInputs backbone_in;
    std::string backbone_out, backbone_scores, backbone_xml;
    double alpha = 0.05;
    auto* cmd_backbone = app.add_subcommand("backbone", "disparity-filter backbone extraction");
    add_edges_option(cmd_backbone, backbone_in);
    cmd_backbone->add_option("--alpha", alpha, "significance level in (0,1)")
        ->capture_default_str();
    cmd_backbone->add_option("--out", backbone_out, "retained edges CSV")->required();
    cmd_backbone->add_option("--scores", backbone_scores,
                             "per-edge alpha scores CSV (all input edges)");
    cmd_backbone->add_option("--xml", backbone_xml, "also export the backbone as GraphML XML");
    cmd_backbone->callback([&] {
        auto graph = backbone_in.load_graph();
        auto result = disparity_filter(graph, alpha);
        write_edge_list_csv(result.backbone, backbone_out);
        if (!backbone_scores.empty()) {
            write_backbone_scores_csv(graph, result, backbone_scores);
        }
        if (!backbone_xml.empty()) {
            emit_graph_export(result.backbone, nullptr, ExportFormat::graphml, backbone_xml);
        }
        std::cout << "retained " << result.backbone.edge_count() << " of " << graph.edge_count()
                  << " edges at alpha " << alpha << "\n";
        if (!result.removed_nodes.empty()) {
            std::cout << result.removed_nodes.size() << " nodes isolated and dropped\n";
        }
    });

    // describe
    CommonInputs describe_in;
    std::string describe_out;
    auto* cmd_describe = app.add_subcommand("describe", "headline descriptive statistics");
    add_edges_option(cmd_describe, describe_in);
    add_partition_options(cmd_describe, describe_in);
    cmd_describe->add_option("--out", describe_out, "report JSON path")->required();
    cmd_describe->callback([&] {
        auto graph = describe_in.load_graph();
        auto partition = describe_in.load_part(graph);
        auto report = describe(graph, partition);
        auto census = dyad_census(graph);
        auto ei = ei_index(graph, partition);
        write_text_file(describe_out, descriptives_json_text(report, census, ei.global));
    });

    // ei
    CommonInputs ei_in;
    std::string ei_out;
    auto* cmd_ei = app.add_subcommand("ei", "per-node and global E-I index");
    add_edges_option(cmd_ei, ei_in);
    add_partition_options(cmd_ei, ei_in);
    cmd_ei->add_option("--out", ei_out, "E-I CSV path")->required();
    cmd_ei->callback([&] {
        auto graph = ei_in.load_graph();
        auto partition = ei_in.load_part(graph);
        auto scores = ei_index(graph, partition);
        write_ei_csv(graph, partition, scores, ei_out);
        std::cout << "global E-I " << csv::format_double(scores.global) << "\n";
    });

    // core
    CommonInputs core_in;
    std::string core_out, core_strength = "total";
    auto* cmd_core = app.add_subcommand("core", "rich-core core/periphery split");
    add_edges_option(cmd_core, core_in);
    cmd_core->add_option("--strength", core_strength, "ranking strength: total, in, or out")
        ->capture_default_str();
    cmd_core->add_option("--out", core_out, "core CSV path")->required();
    cmd_core->callback([&] {
        auto graph = core_in.load_graph();
        auto dir = parse_direction(core_strength);
        auto assignment = rich_core(graph, dir);
        write_core_csv(graph, assignment, dir, core_out);
        std::cout << "core size " << assignment.core.size() << " of " << graph.node_count()
                  << " (r* = " << assignment.r_star << ")\n";
    });

    // brokerage
    CommonInputs brokerage_in;
    std::string brokerage_out;
    auto* cmd_brokerage = app.add_subcommand("brokerage", "Gould-Fernandez brokerage census");
    add_edges_option(cmd_brokerage, brokerage_in);
    add_partition_options(cmd_brokerage, brokerage_in);
    cmd_brokerage->add_option("--out", brokerage_out, "census CSV path")->required();
    cmd_brokerage->callback([&] {
        auto graph = brokerage_in.load_graph();
        auto partition = brokerage_in.load_part(graph);
        write_brokerage_csv(graph, partition, brokerage_out);
    });

    // nullsim
    CommonInputs nullsim_in;
    std::string nullsim_method = "degree", nullsim_dir;
    RewireConfig rewire;
    auto* cmd_nullsim = app.add_subcommand("nullsim", "degree-preserving null ensemble");
    add_edges_option(cmd_nullsim, nullsim_in);
    cmd_nullsim->add_option("--method", nullsim_method, "null model kind (degree)")
        ->capture_default_str();
    cmd_nullsim->add_option("--samples", rewire.samples, "ensemble size")->capture_default_str();
    cmd_nullsim->add_option("--seed", rewire.seed, "master seed")->capture_default_str();
    cmd_nullsim->add_option("--swaps-per-edge", rewire.swaps_per_edge, "swap attempts per edge")
        ->capture_default_str();
    cmd_nullsim->add_option("--threads", rewire.threads, "worker count (0 = auto)");
    cmd_nullsim->add_option("--out-dir", nullsim_dir, "directory for sample CSVs")->required();
    cmd_nullsim->callback([&] {
        if (nullsim_method != "degree") {
            throw ConfigError("unknown null model method: " + nullsim_method);
        }
        auto graph = nullsim_in.load_graph();
        auto samples = degree_preserving_sample(graph, rewire);
        write_samples(samples, nullsim_dir);
        std::cout << "wrote " << samples.size() << " samples to " << nullsim_dir << "\n";
    });

    // ergm fit / ergm simulate
    auto* cmd_ergm = app.add_subcommand("ergm", "exponential random graph model");
    cmd_ergm->require_subcommand(1);

    CommonInputs fit_in;
    std::string fit_terms, fit_out;
    auto* cmd_fit = cmd_ergm->add_subcommand("fit", "maximum pseudo-likelihood fit");
    add_edges_option(cmd_fit, fit_in);
    cmd_fit->add_option("--partition", fit_in.partition,
                        "partition CSV, needed by sender/receiver factor terms");
    cmd_fit->add_option("--baseline", fit_in.baseline, "baseline region label");
    cmd_fit->add_option("--terms", fit_terms, "term list JSON (default: the full term set)");
    cmd_fit->add_option("--out", fit_out, "fit JSON path")->required();
    cmd_fit->callback([&] {
        auto graph = fit_in.load_graph();
        std::optional<Partition> partition;
        if (!fit_in.partition.empty()) {
            partition = fit_in.load_part(graph);
        }
        auto terms = fit_terms.empty() ? default_term_set() : parse_terms_json(fit_terms);
        if (fit_in.partition.empty()) {
            std::erase_if(terms, [](const TermSpec& t) { return is_factor_term(t.kind); });
            if (terms.empty()) {
                throw ConfigError("all requested terms need a partition; pass --partition");
            }
        }
        auto model = build_model(graph, partition, terms);
        auto fit = fit_mple(graph, model);
        write_text_file(fit_out, fit_json_text(model, fit, &graph));
        for (size_t k = 0; k < fit.names.size(); ++k) {
            std::cout << fit.names[k] << " " << csv::format_double(fit.coefficients[k]) << " (se "
                      << csv::format_double(fit.standard_errors[k]) << ")\n";
        }
        std::cout << "pseudo-loglik " << csv::format_double(fit.pseudo_loglik) << ", AIC "
                  << csv::format_double(fit.aic) << ", "
                  << (fit.converged ? "converged" : "NOT converged") << " in " << fit.iterations
                  << " iterations\n";
    });

    std::string sim_fit, sim_dir, sim_initial = "observed";
    SimulationConfig sim_config;
    auto* cmd_sim = cmd_ergm->add_subcommand("simulate", "Metropolis network simulation");
    cmd_sim->add_option("--fit", sim_fit, "fit JSON from `ergm fit`")->required();
    cmd_sim->add_option("--samples", sim_config.samples, "ensemble size")->capture_default_str();
    cmd_sim->add_option("--seed", sim_config.seed, "master seed")->capture_default_str();
    cmd_sim->add_option("--burnin", sim_config.burnin, "proposals before sampling (-1 = 20n(n-1))");
    cmd_sim->add_option("--interval", sim_config.interval,
                        "proposals between samples (-1 = n(n-1))");
    cmd_sim->add_option("--initial", sim_initial, "chain start: observed or empty")
        ->capture_default_str();
    cmd_sim->add_option("--threads", sim_config.threads, "worker count (0 = auto)");
    cmd_sim->add_option("--out-dir", sim_dir, "directory for sample CSVs")->required();
    cmd_sim->callback([&] {
        auto file = read_fit_json(sim_fit);
        TradeGraph initial;
        if (sim_initial == "observed") {
            if (!file.observed) {
                throw ConfigError(sim_fit +
                                  " has no observed ties; rerun `ergm fit` or use --initial empty");
            }
            initial = *file.observed;
        } else if (sim_initial == "empty") {
            initial = TradeGraph::over_nodes(file.model.node_labels, {});
        } else {
            throw ConfigError("unknown --initial value: " + sim_initial);
        }
        auto result = simulate_ensemble(file.model, file.fit.coefficients, initial, sim_config);
        write_samples(result.samples, sim_dir);
        for (const auto& w : result.warnings) {
            std::cerr << "warning: " << w << "\n";
        }
        double mean = 0.0;
        for (double d : result.densities) mean += d;
        mean /= static_cast<double>(result.densities.size());
        std::cout << "wrote " << result.samples.size() << " samples to " << sim_dir
                  << " (mean density " << csv::format_double(mean) << ")\n";
    });

    // zscore
    CommonInputs zscore_in;
    std::string zscore_null = "degree", zscore_out, zscore_plot, zscore_percountry, zscore_terms;
    int zscore_samples = 1000;
    std::uint64_t zscore_seed = 42;
    int zscore_swaps = 100;
    int zscore_threads = 0;
    std::int64_t zscore_burnin = -1, zscore_interval = -1;
    auto* cmd_zscore = app.add_subcommand("zscore", "role significance against a null ensemble");
    add_edges_option(cmd_zscore, zscore_in);
    add_partition_options(cmd_zscore, zscore_in);
    cmd_zscore->add_option("--null", zscore_null, "null kind: ergm or degree")
        ->capture_default_str();
    cmd_zscore->add_option("--samples", zscore_samples, "ensemble size")->capture_default_str();
    cmd_zscore->add_option("--seed", zscore_seed, "master seed")->capture_default_str();
    cmd_zscore->add_option("--swaps-per-edge", zscore_swaps, "degree null swap budget")
        ->capture_default_str();
    cmd_zscore->add_option("--terms", zscore_terms, "ERGM term list JSON for --null ergm");
    cmd_zscore->add_option("--burnin", zscore_burnin, "ERGM sampler burn-in");
    cmd_zscore->add_option("--interval", zscore_interval, "ERGM sampler interval");
    cmd_zscore->add_option("--threads", zscore_threads, "worker count (0 = auto)");
    cmd_zscore->add_option("--out", zscore_out, "report JSON path")->required();
    cmd_zscore->add_option("--plotdata", zscore_plot, "plot data CSV path");
    cmd_zscore->add_option("--percountry", zscore_percountry, "per-node observed/null CSV path");
    cmd_zscore->callback([&] {
        auto graph = zscore_in.load_graph();
        auto partition = zscore_in.load_part(graph);
        auto observed = brokerage_census(graph, partition);

        std::vector<TradeGraph> ensemble;
        if (zscore_null == "degree") {
            RewireConfig cfg;
            cfg.samples = zscore_samples;
            cfg.seed = zscore_seed;
            cfg.swaps_per_edge = zscore_swaps;
            cfg.threads = zscore_threads;
            ensemble = degree_preserving_sample(graph, cfg);
        } else if (zscore_null == "ergm") {
            auto terms = zscore_terms.empty() ? default_term_set() : parse_terms_json(zscore_terms);
            auto model = build_model(graph, partition, terms);
            auto fit = fit_mple(graph, model);
            SimulationConfig cfg;
            cfg.samples = zscore_samples;
            cfg.seed = zscore_seed;
            cfg.burnin = zscore_burnin;
            cfg.interval = zscore_interval;
            cfg.threads = zscore_threads;
            auto result = simulate_ensemble(model, fit.coefficients, graph, cfg);
            for (const auto& w : result.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            ensemble = std::move(result.samples);
        } else {
            throw ConfigError("unknown --null kind: " + zscore_null);
        }

        auto report = role_significance_profile(observed, ensemble, graph, partition, zscore_null,
                                                2.0, zscore_threads);
        std::vector<ZScoreReport> reports = {report};
        write_text_file(zscore_out, zscore_json_text(reports));
        if (!zscore_plot.empty()) write_z_plotdata_csv(reports, zscore_plot);
        if (!zscore_percountry.empty()) write_z_percountry_csv(reports, partition, zscore_percountry);
        for (size_t role = 0; role < kRoleCount; ++role) {
            const auto& entry = report.per_role[role];
            std::cout << kRoleNames[role] << ": observed " << entry.f_real << ", null "
                      << csv::format_double(entry.null_mean) << " +- "
                      << csv::format_double(entry.null_std) << ", "
                      << (entry.z ? "Z " + csv::format_double(*entry.z) : std::string("Z degenerate"))
                      << " -> " << significance_name(entry.classification) << "\n";
        }
    });

    // pipeline run
    auto* cmd_pipeline = app.add_subcommand("pipeline", "end-to-end workflow");
    cmd_pipeline->require_subcommand(1);
    std::string pipeline_config;
    int pipeline_threads = -1;
    auto* cmd_run = cmd_pipeline->add_subcommand("run", "run every stage from a JSON config");
    cmd_run->add_option("--config", pipeline_config, "pipeline config JSON")->required();
    cmd_run->add_option("--threads", pipeline_threads, "override the config's worker count");
    cmd_run->callback([&] {
        auto config = load_pipeline_config(pipeline_config);
        if (pipeline_threads >= 0) config.threads = pipeline_threads;
        auto manifest = run_pipeline(config);
        std::cout << "wrote " << manifest.artifacts.size() << " artifacts and "
                  << manifest.manifest_path.filename().string() << " to "
                  << config.output_dir.string() << "\n";
        for (const auto& w : manifest.warnings) {
            std::cerr << "warning: " << w << "\n";
        }
    });

    try {
        return dispatch(app, argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
