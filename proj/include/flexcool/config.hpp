#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "flexcool/presets.hpp"
#include "flexcool/sweep.hpp"

namespace flexcool {

// A structured run description. JSON layout:
//
//   {
//     "atoms":   {"gamma_sp", "rabi", "detuning", "lamb_dicke", "omega_ph"},
//     "modes":   [{"nu", "kappa", "g"}, ...],
//     "bath":    {"temperature", "phonon_vacuum_noise"?},
//     "control": {"theta"} | {"theta_over_nu", "reference_mode"?},
//     "cp_shifts"?: [...],
//     "sweep"?:  {"axis", "grid" | "start"/"stop"/"points", "bipartitions"?,
//                 "observables"?: {"occupations", "decay_rate"},
//                 "outer"?: {"axis", "grid" | "start"/"stop"/"points"}},
//     "meta"?:   {"preset", "series", "provenance"}
//   }
//
// Unknown keys are errors.
struct Document {
    SystemConfig system;
    std::optional<double> theta_over_nu;  // when set, system.theta = theta_over_nu * nu_ref
    int reference_mode = 0;
    std::optional<SweepSpec> sweep;       // sweep->base mirrors system
    std::string preset;
    std::string series;
    std::string provenance;
};

nlohmann::json to_json(const Document& doc);

// Throws ConfigError naming the offending key.
Document document_from_json(const nlohmann::json& tree);

// Throws ConfigError with "origin:line:column" diagnostics.
nlohmann::json parse_document_text(std::string_view text, const std::string& origin);
nlohmann::json read_document_file(const std::filesystem::path& path);

nlohmann::json preset_document(const Preset& preset, const Series& series);

// Applies one "key=value" override to the tree. Accepted keys:
//   gamma_sp rabi detuning lamb_dicke omega_ph (also atoms.<key>)
//   temperature | T, phonon_vacuum_noise (also bath.<key>)
//   theta, theta_over_nu, reference_mode (also control.<key>)
//   g nu kappa (every mode), gI nuI kappaI (mode I, 1-based)
//   sweep.axis sweep.start sweep.stop sweep.points sweep.bipartitions
//   sweep.outer.axis sweep.outer.start sweep.outer.stop sweep.outer.points
// Throws ConfigError for unknown keys and unparsable values.
void apply_override(nlohmann::json& tree, std::string_view assignment);

}  // namespace flexcool
