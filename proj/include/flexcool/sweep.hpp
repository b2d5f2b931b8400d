#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexcool/entanglement.hpp"
#include "flexcool/params.hpp"
#include "flexcool/stability.hpp"

namespace flexcool {

enum class SweepAxis { ThetaOverNu, Coupling, Temperature };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_axis(std::string_view name);

// A pair of parties for entanglement evaluation. Labels are 1-based:
// "m1_m2" (mechanical pair) or "m1_ph" (mechanical mode and phonon).
struct Bipartition {
    enum class Kind { MechMech, MechPhonon };
    Kind kind = Kind::MechPhonon;
    int first = 0;   // 0-based mode index
    int second = 0;  // 0-based mode index, unused for MechPhonon

    std::string label() const;
    static Bipartition parse(std::string_view label);
    static Bipartition mech_mech(int i, int j) { return {Kind::MechMech, i, j}; }
    static Bipartition mech_phonon(int i) { return {Kind::MechPhonon, i, 0}; }

    bool operator==(const Bipartition&) const = default;
};

struct Observables {
    bool occupations = true;
    bool decay_rate = true;
    std::vector<Bipartition> bipartitions;
};

// Second, slower axis for density maps: every outer value runs the full inner grid.
struct OuterAxis {
    SweepAxis axis = SweepAxis::Coupling;
    std::vector<double> grid;
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::ThetaOverNu;
    std::vector<double> grid;
    SystemConfig base;
    int reference_mode = 0;  // nu in theta/nu
    Observables observables;
    std::optional<OuterAxis> outer;
};

// Full single-point evaluation; what `simulate` reports.
struct PointReport {
    EffectiveParams effective;
    StabilityReport stability;
    std::vector<double> m_eff;
    std::optional<std::pair<double, double>> phonon_variances;
    std::optional<double> min_symplectic_eigenvalue;
    std::optional<double> relative_residual;
    std::vector<EntanglementMeasures> entanglement;  // one per requested bipartition
    std::vector<std::string> warnings;
    std::string error;  // solver failure at a stable point
};

PointReport evaluate_point(const SystemConfig& config, const std::vector<Bipartition>& bipartitions);

struct SweepRow {
    std::optional<double> outer_value;
    double axis_value = 0.0;
    bool stable = false;
    std::optional<double> decay_rate;
    std::vector<double> m_eff;                       // empty when unstable
    std::vector<EntanglementMeasures> entanglement;  // empty when unstable
    std::string error;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::ThetaOverNu;
    std::optional<SweepAxis> outer_axis;
    int n_modes = 0;
    Observables observables;
    std::vector<SweepRow> rows;  // outer-major, inner grid order
};

// Throws ConfigError for an empty or non-monotone grid, a bad reference
// mode or a bipartition referring to a missing mode.
void validate(const SweepSpec& spec);

// Config at one grid point.
SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis, double value, int reference_mode);

// Evaluates every grid point; per-point failures are recorded in the row.
// threads == 0 picks hardware concurrency. Output is independent of threads.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

std::vector<double> linspace(double start, double stop, int points);

}  // namespace flexcool
