#pragma once

#include "tradenet/backbone.hpp"
#include "tradenet/brokerage.hpp"
#include "tradenet/core_periphery.hpp"
#include "tradenet/descriptives.hpp"
#include "tradenet/ergm.hpp"
#include "tradenet/significance.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tradenet {

// Artifact builders shared by the CLI commands and the pipeline. JSON is
// pretty-printed with keys in fixed order and CSV fields use shortest
// round-trip number formatting, so identical inputs give identical bytes.

// {"summary": {the six headline statistics}, "dyad_census": ..., "global_ei": ...}
std::string descriptives_json_text(const DescriptiveReport& report, const DyadCensus& census,
                                   double global_ei);

// Self-contained fit document: node set, partition, term list with decays,
// coefficient/SE pairs, the convergence metadata, and (when given) the
// observed tie list. Enough to rerun `ergm simulate` without the original
// inputs.
std::string fit_json_text(const ModelSpec& model, const ErgmFit& fit,
                          const TradeGraph* observed = nullptr);

struct FitFile {
    ModelSpec model;
    ErgmFit fit;
    std::optional<TradeGraph> observed; // binary reconstruction of the ties
};
FitFile read_fit_json(const std::filesystem::path& path);

// A JSON array of term objects: {"kind": "...", "decay": 0.5, "literal": false}.
// decay/literal are only accepted on gw terms.
std::vector<TermSpec> parse_terms_json(const std::filesystem::path& path);
std::vector<TermSpec> parse_terms_json_text(const std::string& text, const std::string& origin);

std::string zscore_json_text(const std::vector<ZScoreReport>& reports);

void write_backbone_scores_csv(const TradeGraph& graph, const BackboneResult& result,
                               const std::filesystem::path& path);
void write_ei_csv(const TradeGraph& graph, const Partition& partition, const EiScores& scores,
                  const std::filesystem::path& path);
void write_core_csv(const TradeGraph& graph, const CoreAssignment& assignment,
                    Direction strength_dir, const std::filesystem::path& path);
void write_brokerage_csv(const TradeGraph& graph, const Partition& partition,
                         const std::filesystem::path& path);
void write_z_plotdata_csv(const std::vector<ZScoreReport>& reports,
                          const std::filesystem::path& path);
void write_z_percountry_csv(const std::vector<ZScoreReport>& reports,
                            const Partition& partition, const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace tradenet
