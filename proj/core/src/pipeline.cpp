#include "tradenet/pipeline.hpp"

#include "tradenet/backbone.hpp"
#include "tradenet/brokerage.hpp"
#include "tradenet/core_periphery.hpp"
#include "tradenet/csv.hpp"
#include "tradenet/descriptives.hpp"
#include "tradenet/errors.hpp"
#include "tradenet/null_models.hpp"
#include "tradenet/reports.hpp"
#include "tradenet/significance.hpp"
#include "tradenet/version.hpp"

#include "json.hpp"

#include <chrono>
#include <fstream>
#include <functional>

namespace tradenet {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_config(const std::string& file, const std::string& path,
                             const std::string& why) {
    throw ConfigError(file + ": " + path + ": " + why);
}

double require_number(const ordered_json& j, const std::string& file, const std::string& path) {
    if (!j.is_number()) bad_config(file, path, "must be a number");
    return j.get<double>();
}

std::int64_t require_integer(const ordered_json& j, const std::string& file,
                             const std::string& path) {
    if (!j.is_number_integer()) bad_config(file, path, "must be an integer");
    return j.get<std::int64_t>();
}

int require_positive_int(const ordered_json& j, const std::string& file,
                         const std::string& path) {
    auto v = require_integer(j, file, path);
    if (v <= 0 || v > INT32_MAX) bad_config(file, path, "must be a positive integer");
    return static_cast<int>(v);
}

std::string require_string(const ordered_json& j, const std::string& file,
                           const std::string& path) {
    if (!j.is_string()) bad_config(file, path, "must be a string");
    return j.get<std::string>();
}

} // namespace

std::vector<TermSpec> default_term_set() {
    std::vector<TermSpec> terms;
    for (TermKind kind : {TermKind::edges, TermKind::mutual, TermKind::gwodegree,
                          TermKind::gwidegree, TermKind::gwesp, TermKind::gwdsp,
                          TermKind::sender_factor, TermKind::receiver_factor}) {
        TermSpec t;
        t.kind = kind;
        terms.push_back(t);
    }
    return terms;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    const std::string file = path.string();
    if (!j.is_object()) bad_config(file, "$", "must be a JSON object");

    PipelineConfig config;
    auto base_dir = path.parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp : base_dir / fp;
    };

    bool saw_edges = false, saw_partition = false, saw_out = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "edges") {
            config.edges = resolve(require_string(value, file, key));
            saw_edges = true;
        } else if (key == "partition") {
            config.partition = resolve(require_string(value, file, key));
            saw_partition = true;
        } else if (key == "output_dir") {
            config.output_dir = resolve(require_string(value, file, key));
            saw_out = true;
        } else if (key == "baseline") {
            config.baseline = require_string(value, file, key);
        } else if (key == "alpha") {
            config.alpha = require_number(value, file, key);
            if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
                bad_config(file, key, "must be in (0, 1)");
            }
        } else if (key == "seed") {
            if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
                bad_config(file, key, "must be a nonnegative integer");
            }
            config.seed = value.get<std::uint64_t>();
        } else if (key == "threads") {
            auto v = require_integer(value, file, key);
            if (v < 0) bad_config(file, key, "must be nonnegative");
            config.threads = static_cast<int>(v);
        } else if (key == "ergm") {
            if (!value.is_object()) bad_config(file, key, "must be an object");
            for (const auto& [ek, ev] : value.items()) {
                std::string epath = "ergm." + ek;
                if (ek == "enabled") {
                    if (!ev.is_boolean()) bad_config(file, epath, "must be a boolean");
                    config.ergm_enabled = ev.get<bool>();
                } else if (ek == "samples") {
                    config.ergm_samples = require_positive_int(ev, file, epath);
                } else if (ek == "burnin") {
                    config.ergm_burnin = require_integer(ev, file, epath);
                    if (config.ergm_burnin < 0) bad_config(file, epath, "must be nonnegative");
                } else if (ek == "interval") {
                    config.ergm_interval = require_integer(ev, file, epath);
                    if (config.ergm_interval < 0) bad_config(file, epath, "must be nonnegative");
                } else if (ek == "terms") {
                    if (!ev.is_array() || ev.empty()) {
                        bad_config(file, epath, "must be a non-empty array of terms");
                    }
                    config.ergm_terms = parse_terms_json_text(ev.dump(), file + ": " + epath);
                } else {
                    bad_config(file, epath, "unknown key");
                }
            }
        } else if (key == "degree_null") {
            if (!value.is_object()) bad_config(file, key, "must be an object");
            for (const auto& [dk, dv] : value.items()) {
                std::string dpath = "degree_null." + dk;
                if (dk == "samples") {
                    config.degree_samples = require_positive_int(dv, file, dpath);
                } else if (dk == "swaps_per_edge") {
                    config.swaps_per_edge = require_positive_int(dv, file, dpath);
                } else {
                    bad_config(file, dpath, "unknown key");
                }
            }
        } else {
            bad_config(file, key, "unknown key");
        }
    }
    if (!saw_edges) bad_config(file, "edges", "required");
    if (!saw_partition) bad_config(file, "partition", "required");
    if (!saw_out) bad_config(file, "output_dir", "required");
    if (config.ergm_terms.empty()) config.ergm_terms = default_term_set();
    return config;
}

namespace {

ordered_json config_echo(const PipelineConfig& config) {
    ordered_json terms = ordered_json::array();
    for (const auto& term : config.ergm_terms) {
        ordered_json t;
        t["kind"] = term_kind_name(term.kind);
        if (is_gw_term(term.kind)) {
            t["decay"] = term.decay;
            t["literal"] = term.literal;
        }
        terms.push_back(t);
    }
    ordered_json j;
    j["edges"] = config.edges.string();
    j["partition"] = config.partition.string();
    j["output_dir"] = config.output_dir.string();
    j["baseline"] = config.baseline;
    j["alpha"] = config.alpha;
    j["seed"] = config.seed;
    j["threads"] = config.threads;
    j["ergm"] = {
        {"enabled", config.ergm_enabled},
        {"samples", config.ergm_samples},
        {"burnin", config.ergm_burnin},
        {"interval", config.ergm_interval},
        {"terms", terms},
    };
    j["degree_null"] = {
        {"samples", config.degree_samples},
        {"swaps_per_edge", config.swaps_per_edge},
    };
    return j;
}

struct PipelineState {
    const PipelineConfig& config;
    RunManifest manifest;
    ordered_json echo;
    std::string current_stage;

    explicit PipelineState(const PipelineConfig& cfg) : config(cfg), echo(config_echo(cfg)) {}

    void write_manifest(bool partial, const std::string& error = {}) {
        ordered_json j;
        j["version"] = kVersion;
        j["config"] = echo;
        ordered_json stages = ordered_json::array();
        for (const auto& s : manifest.stages) {
            stages.push_back({{"name", s.name}, {"ms", s.ms}});
        }
        j["stages"] = stages;
        j["warnings"] = manifest.warnings;
        j["artifacts"] = manifest.artifacts;
        if (partial) {
            j["failed_stage"] = current_stage;
            j["error"] = error;
        }
        auto name = partial ? "manifest.json.partial" : "manifest.json";
        manifest.manifest_path = config.output_dir / name;
        write_text_file(manifest.manifest_path, j.dump(2) + "\n");
    }
};

template <class F>
void run_stage(PipelineState& state, const std::string& name, F&& body) {
    state.current_stage = name;
    auto started = std::chrono::steady_clock::now();
    auto rethrow = [&](const auto& error) {
        using E = std::decay_t<decltype(error)>;
        std::string message = "stage '" + name + "': " + error.what();
        state.write_manifest(true, error.what());
        throw E(message);
    };
    try {
        body();
    } catch (const ConfigError& e) {
        rethrow(e);
    } catch (const DataError& e) {
        rethrow(e);
    } catch (const NumericalError& e) {
        rethrow(e);
    } catch (const IoError& e) {
        rethrow(e);
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    state.manifest.stages.push_back(
        {name, std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()});
}

} // namespace

RunManifest run_pipeline(const PipelineConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw ConfigError("alpha must be in (0, 1)");
    }
    if (config.ergm_samples <= 0 || config.degree_samples <= 0 || config.swaps_per_edge <= 0) {
        throw ConfigError("sample counts and swap budget must be positive");
    }
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + config.output_dir.string() + ": " +
                      ec.message());
    }

    PipelineState state(config);
    auto emit = [&](const std::string& name) { state.manifest.artifacts.push_back(name); };

    TradeGraph raw;
    LoadReport load_report;
    run_stage(state, "load", [&] { raw = load_edge_list_csv(config.edges, &load_report); });
    for (const auto& w : load_report.warnings) state.manifest.warnings.push_back(w);
    if (load_report.self_loops_dropped > 0) {
        state.manifest.warnings.push_back(std::to_string(load_report.self_loops_dropped) +
                                          " self-loop records dropped");
    }
    if (load_report.duplicates_merged > 0) {
        state.manifest.warnings.push_back(std::to_string(load_report.duplicates_merged) +
                                          " duplicate edge records merged");
    }

    TradeGraph graph;
    Partition partition;
    run_stage(state, "backbone", [&] {
        auto result = disparity_filter(raw, config.alpha);
        graph = std::move(result.backbone);
        if (!result.removed_nodes.empty()) {
            state.manifest.warnings.push_back(
                std::to_string(result.removed_nodes.size()) +
                " nodes isolated by the disparity filter were dropped");
        }
        write_edge_list_csv(graph, config.output_dir / "backbone.csv");
        emit("backbone.csv");
        write_backbone_scores_csv(raw, result, config.output_dir / "backbone_scores.csv");
        emit("backbone_scores.csv");
    });

    run_stage(state, "partition", [&] {
        LoadReport report;
        partition = load_partition_csv(config.partition, graph, config.baseline, &report);
        for (const auto& w : report.warnings) state.manifest.warnings.push_back(w);
    });

    run_stage(state, "descriptives", [&] {
        auto report = describe(graph, partition);
        auto census = dyad_census(graph);
        auto ei = ei_index(graph, partition);
        write_text_file(config.output_dir / "descriptives.json",
                        descriptives_json_text(report, census, ei.global));
        emit("descriptives.json");
        write_ei_csv(graph, partition, ei, config.output_dir / "ei.csv");
        emit("ei.csv");
    });

    run_stage(state, "core", [&] {
        auto assignment = rich_core(graph, Direction::total);
        write_core_csv(graph, assignment, Direction::total, config.output_dir / "core.csv");
        emit("core.csv");
    });

    BrokerageCensus observed;
    run_stage(state, "brokerage", [&] {
        observed = brokerage_census(graph, partition);
        write_brokerage_csv(graph, partition, config.output_dir / "brokerage.csv");
        emit("brokerage.csv");
    });

    ModelSpec model;
    model.terms = config.ergm_terms;
    model.node_labels = graph.node_labels();
    model.partition = partition;

    std::vector<ZScoreReport> profiles;
    if (config.ergm_enabled) {
        ErgmFit fit;
        run_stage(state, "ergm-fit", [&] {
            fit = fit_mple(graph, model);
            if (!fit.converged) {
                state.manifest.warnings.push_back(
                    "ERGM pseudo-likelihood fit did not converge in " +
                    std::to_string(fit.iterations) + " iterations");
            }
            write_text_file(config.output_dir / "ergm_fit.json",
                            fit_json_text(model, fit, &graph));
            emit("ergm_fit.json");
        });

        run_stage(state, "ergm-null", [&] {
            SimulationConfig sim;
            sim.samples = config.ergm_samples;
            sim.burnin = config.ergm_burnin;
            sim.interval = config.ergm_interval;
            sim.seed = config.seed;
            sim.threads = config.threads;
            auto result = simulate_ensemble(model, fit.coefficients, graph, sim);
            for (const auto& w : result.warnings) state.manifest.warnings.push_back(w);
            profiles.push_back(role_significance_profile(observed, result.samples, graph,
                                                         partition, "ergm", 2.0,
                                                         config.threads));
        });
    }

    run_stage(state, "degree-null", [&] {
        RewireConfig rewire;
        rewire.swaps_per_edge = config.swaps_per_edge;
        rewire.seed = config.seed;
        rewire.samples = config.degree_samples;
        rewire.threads = config.threads;
        auto ensemble = degree_preserving_sample(graph, rewire);
        profiles.push_back(role_significance_profile(observed, ensemble, graph, partition,
                                                     "degree", 2.0, config.threads));
    });

    run_stage(state, "significance", [&] {
        write_text_file(config.output_dir / "zscores.json", zscore_json_text(profiles));
        emit("zscores.json");
        write_z_plotdata_csv(profiles, config.output_dir / "z_plotdata.csv");
        emit("z_plotdata.csv");
        write_z_percountry_csv(profiles, partition, config.output_dir / "z_percountry.csv");
        emit("z_percountry.csv");
    });

    state.write_manifest(false);
    return state.manifest;
}

} // namespace tradenet
