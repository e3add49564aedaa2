#include "tradenet/reports.hpp"

#include "tradenet/csv.hpp"
#include "tradenet/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace tradenet {

using ordered_json = nlohmann::ordered_json;

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    if (!out.flush()) {
        throw IoError("failed writing " + path.string());
    }
}

ordered_json term_to_json(const TermSpec& term) {
    ordered_json j;
    j["kind"] = term_kind_name(term.kind);
    if (is_gw_term(term.kind)) {
        j["decay"] = term.decay;
        j["literal"] = term.literal;
    }
    return j;
}

TermSpec term_from_json(const ordered_json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError(origin + ": each term must be an object with a string 'kind'");
    }
    TermSpec term;
    term.kind = parse_term_kind(j["kind"].get<std::string>());
    for (const auto& [key, value] : j.items()) {
        if (key == "kind") continue;
        if (key == "decay") {
            if (!is_gw_term(term.kind)) {
                throw ConfigError(origin + ": 'decay' is only valid on gw terms, not " +
                                  term_kind_name(term.kind));
            }
            if (!value.is_number()) throw ConfigError(origin + ": 'decay' must be a number");
            term.decay = value.get<double>();
            if (!(term.decay >= 0.0)) {
                throw ConfigError(origin + ": 'decay' must be non-negative");
            }
        } else if (key == "literal") {
            if (!is_gw_term(term.kind)) {
                throw ConfigError(origin + ": 'literal' is only valid on gw terms, not " +
                                  term_kind_name(term.kind));
            }
            if (!value.is_boolean()) throw ConfigError(origin + ": 'literal' must be a boolean");
            term.literal = value.get<bool>();
        } else {
            throw ConfigError(origin + ": unknown term field '" + key + "'");
        }
    }
    return term;
}

ordered_json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

} // namespace

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    auto out = open_out(path);
    out << text;
    finish(out, path);
}

std::string descriptives_json_text(const DescriptiveReport& report, const DyadCensus& census,
                                   double global_ei) {
    ordered_json j;
    j["summary"] = {
        {"size", report.size},
        {"density", report.density},
        {"reciprocity", report.reciprocity},
        {"in_centralisation", report.in_centralisation},
        {"out_centralisation", report.out_centralisation},
        {"regional_assortativity", report.regional_assortativity},
    };
    j["dyad_census"] = {
        {"mutual", census.mutual},
        {"asymmetric", census.asymmetric},
        {"null", census.null_dyads},
    };
    j["global_ei"] = global_ei;
    return j.dump(2) + "\n";
}

std::string fit_json_text(const ModelSpec& model, const ErgmFit& fit,
                          const TradeGraph* observed) {
    ordered_json j;
    j["model"]["nodes"] = model.node_labels;
    if (model.partition) {
        const auto& p = *model.partition;
        j["model"]["partition"] = {
            {"labels", p.labels},
            {"baseline", p.labels[static_cast<size_t>(p.baseline)]},
            {"groups", p.group_of},
        };
    }
    ordered_json terms = ordered_json::array();
    for (const auto& term : model.terms) terms.push_back(term_to_json(term));
    j["model"]["terms"] = terms;

    ordered_json coeffs = ordered_json::array();
    for (size_t k = 0; k < fit.coefficients.size(); ++k) {
        coeffs.push_back({
            {"term", fit.names[k]},
            {"estimate", fit.coefficients[k]},
            {"se", fit.standard_errors[k]},
        });
    }
    j["fit"] = {
        {"coefficients", coeffs},
        {"pseudo_loglik", fit.pseudo_loglik},
        {"aic", fit.aic},
        {"converged", fit.converged},
        {"iterations", fit.iterations},
        {"caveat", fit.caveat},
    };
    if (observed) {
        ordered_json ties = ordered_json::array();
        for (const auto& [s, t, w] : observed->edges()) {
            ties.push_back({observed->label(s), observed->label(t)});
        }
        j["observed"]["ties"] = ties;
    }
    return j.dump(2) + "\n";
}

FitFile read_fit_json(const std::filesystem::path& path) {
    auto j = parse_json_file(path);
    FitFile file;
    try {
        const auto& jm = j.at("model");
        file.model.node_labels = jm.at("nodes").get<std::vector<std::string>>();
        if (jm.contains("partition")) {
            Partition p;
            p.labels = jm["partition"].at("labels").get<std::vector<std::string>>();
            p.group_of = jm["partition"].at("groups").get<std::vector<int>>();
            auto baseline = jm["partition"].at("baseline").get<std::string>();
            p.baseline = -1;
            for (size_t g = 0; g < p.labels.size(); ++g) {
                if (p.labels[g] == baseline) p.baseline = static_cast<int>(g);
            }
            if (p.baseline < 0) {
                throw ConfigError(path.string() + ": baseline label not in partition labels");
            }
            if (p.group_of.size() != file.model.node_labels.size()) {
                throw ConfigError(path.string() + ": partition does not cover the node set");
            }
            for (int g : p.group_of) {
                if (g < 0 || static_cast<size_t>(g) >= p.labels.size()) {
                    throw ConfigError(path.string() + ": group index out of range");
                }
            }
            file.model.partition = std::move(p);
        }
        for (const auto& jt : jm.at("terms")) {
            file.model.terms.push_back(term_from_json(jt, path.string()));
        }

        const auto& jf = j.at("fit");
        for (const auto& jc : jf.at("coefficients")) {
            file.fit.names.push_back(jc.at("term").get<std::string>());
            file.fit.coefficients.push_back(jc.at("estimate").get<double>());
            file.fit.standard_errors.push_back(jc.at("se").get<double>());
        }
        file.fit.pseudo_loglik = jf.at("pseudo_loglik").get<double>();
        file.fit.aic = jf.at("aic").get<double>();
        file.fit.converged = jf.at("converged").get<bool>();
        file.fit.iterations = jf.at("iterations").get<int>();
        if (jf.contains("caveat")) file.fit.caveat = jf["caveat"].get<std::string>();

        if (j.contains("observed")) {
            std::vector<EdgeRecord> records;
            for (const auto& tie : j["observed"].at("ties")) {
                records.push_back({tie.at(0).get<std::string>(), tie.at(1).get<std::string>(), 1.0});
            }
            file.observed = TradeGraph::over_nodes(file.model.node_labels, records);
            if (file.observed->node_count() != file.model.node_labels.size()) {
                throw ConfigError(path.string() + ": observed ties mention nodes outside the model");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (file.fit.coefficients.size() != file.model.statistic_count()) {
        throw ConfigError(path.string() + ": coefficient count does not match the term list");
    }
    return file;
}

std::vector<TermSpec> parse_terms_json_text(const std::string& text, const std::string& origin) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!j.is_array() || j.empty()) {
        throw ConfigError(origin + ": expected a non-empty JSON array of terms");
    }
    std::vector<TermSpec> terms;
    for (const auto& jt : j) terms.push_back(term_from_json(jt, origin));
    return terms;
}

std::vector<TermSpec> parse_terms_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_terms_json_text(buf.str(), path.string());
}

std::string zscore_json_text(const std::vector<ZScoreReport>& reports) {
    ordered_json j;
    if (!reports.empty()) j["threshold"] = reports.front().threshold;
    ordered_json profiles = ordered_json::array();
    for (const auto& report : reports) {
        ordered_json roles;
        for (size_t role = 0; role < kRoleCount; ++role) {
            const auto& entry = report.per_role[role];
            ordered_json je;
            je["f_real"] = entry.f_real;
            je["null_mean"] = entry.null_mean;
            je["null_std"] = entry.null_std;
            if (entry.z) {
                je["z"] = *entry.z;
            } else {
                je["z"] = nullptr;
            }
            je["classification"] = significance_name(entry.classification);
            roles[kRoleNames[role]] = je;
        }
        profiles.push_back({
            {"null_kind", report.null_kind},
            {"ensemble_size", report.ensemble_size},
            {"roles", roles},
        });
    }
    j["profiles"] = profiles;
    return j.dump(2) + "\n";
}

void write_backbone_scores_csv(const TradeGraph& graph, const BackboneResult& result,
                               const std::filesystem::path& path) {
    auto out = open_out(path);
    csv::write_row(out, {"source", "target", "weight", "alpha_out", "alpha_in", "retained"});
    for (const auto& [dyad, score] : result.edge_scores) {
        csv::write_row(out, {
                                graph.label(dyad.first),
                                graph.label(dyad.second),
                                csv::format_double(graph.edge_weight(dyad.first, dyad.second)),
                                csv::format_double(score.alpha_out),
                                csv::format_double(score.alpha_in),
                                score.retained ? "true" : "false",
                            });
    }
    finish(out, path);
}

void write_ei_csv(const TradeGraph& graph, const Partition& partition, const EiScores& scores,
                  const std::filesystem::path& path) {
    auto out = open_out(path);
    csv::write_row(out, {"node", "region", "internal", "external", "ei"});
    for (size_t v = 0; v < graph.node_count(); ++v) {
        auto node = static_cast<int>(v);
        csv::write_row(out, {
                                graph.label(node),
                                partition.label_of(node),
                                std::to_string(scores.internal_ties[v]),
                                std::to_string(scores.external_ties[v]),
                                scores.per_node[v] ? csv::format_double(*scores.per_node[v]) : "",
                            });
    }
    finish(out, path);
}

void write_core_csv(const TradeGraph& graph, const CoreAssignment& assignment,
                    Direction strength_dir, const std::filesystem::path& path) {
    auto out = open_out(path);
    csv::write_row(out, {"node", "rank", "strength", "sigma_plus", "is_core"});
    for (size_t r = 0; r < assignment.ranking.size(); ++r) {
        int node = assignment.ranking[r];
        csv::write_row(out, {
                                graph.label(node),
                                std::to_string(r + 1),
                                csv::format_double(graph.strength(node, strength_dir)),
                                csv::format_double(assignment.sigma_plus[r]),
                                assignment.core.count(node) ? "true" : "false",
                            });
    }
    finish(out, path);
}

void write_brokerage_csv(const TradeGraph& graph, const Partition& partition,
                         const std::filesystem::path& path) {
    auto rows = degree_role_table(graph, partition);
    auto out = open_out(path);
    csv::write_row(out, {"node", "region", "coordinator", "gatekeeper", "representative",
                         "consultant", "liaison", "total", "degree"});
    for (const auto& row : rows) {
        std::vector<std::string> fields = {row.node, row.region};
        for (auto count : row.counts.roles) fields.push_back(std::to_string(count));
        fields.push_back(std::to_string(row.counts.total));
        fields.push_back(std::to_string(row.total_degree));
        csv::write_row(out, fields);
    }
    finish(out, path);
}

void write_z_plotdata_csv(const std::vector<ZScoreReport>& reports,
                          const std::filesystem::path& path) {
    auto out = open_out(path);
    csv::write_row(out, {"role", "null_kind", "f_real", "null_mean", "null_std", "z"});
    for (const auto& report : reports) {
        for (size_t role = 0; role < kRoleCount; ++role) {
            const auto& entry = report.per_role[role];
            csv::write_row(out, {
                                    kRoleNames[role],
                                    report.null_kind,
                                    std::to_string(entry.f_real),
                                    csv::format_double(entry.null_mean),
                                    csv::format_double(entry.null_std),
                                    entry.z ? csv::format_double(*entry.z) : "",
                                });
        }
    }
    finish(out, path);
}

void write_z_percountry_csv(const std::vector<ZScoreReport>& reports,
                            const Partition& partition, const std::filesystem::path& path) {
    auto out = open_out(path);
    csv::write_row(out, {"node", "region", "null_kind", "role", "observed", "null_mean"});
    for (const auto& report : reports) {
        for (size_t v = 0; v < report.node_labels.size(); ++v) {
            for (size_t role = 0; role < kRoleCount; ++role) {
                csv::write_row(out, {
                                        report.node_labels[v],
                                        partition.label_of(static_cast<int>(v)),
                                        report.null_kind,
                                        kRoleNames[role],
                                        std::to_string(report.observed_by_node[v][role]),
                                        csv::format_double(report.null_mean_by_node[v][role]),
                                    });
            }
        }
    }
    finish(out, path);
}

} // namespace tradenet
