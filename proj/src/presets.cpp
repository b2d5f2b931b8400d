#include "flexcool/presets.hpp"

#include "flexcool/errors.hpp"

namespace flexcool {

namespace {

// Atomic parameters shared by every figure; only the Rabi frequency varies.
AtomicParams rubidium_cloud(double rabi) {
    AtomicParams a;
    a.gamma_sp = 6.1e6;
    a.omega_ph = 477.0;
    a.rabi = rabi;
    a.detuning = 45.0e6;
    a.lamb_dicke = 0.15;
    return a;
}

constexpr double kKappa = 2.0;

SweepSpec theta_sweep(std::vector<MechanicalMode> modes, double rabi, double temperature, double lo, double hi,
                      int reference_mode = 0, std::vector<Bipartition> bipartitions = {}) {
    SweepSpec s;
    s.axis = SweepAxis::ThetaOverNu;
    s.grid = linspace(lo, hi, kDefaultGridPoints);
    s.base.atoms = rubidium_cloud(rabi);
    s.base.modes = std::move(modes);
    s.base.temperature = temperature;
    s.reference_mode = reference_mode;
    s.base.theta = s.base.modes.at(reference_mode).nu;
    s.observables.bipartitions = std::move(bipartitions);
    return s;
}

MechanicalMode mode(double nu, double g) { return {nu, kKappa, g}; }

Preset fig2() {
    Preset p;
    p.name = "fig2";
    p.description = "single flexural mode: m_eff and decay rate versus theta/nu";
    p.provenance =
        "Gamma = 6.1 MHz, omega_ph = 477 Hz, Omega = 12 MHz, Delta = 45 MHz, eta = 0.15, kappa = 2 Hz, "
        "nu = 2 MHz, T = 0.01 K (initial occupancy m = 10^2); g = -6.5 kHz (dashed: T = 0.1 K, m = 10^3), "
        "g = -5 kHz, g = 0";
    const double nu = 2.0e6;
    p.series = {
        {"g-6.5k_T0.01", theta_sweep({mode(nu, -6.5e3)}, 12.0e6, 0.01, 0.5, 1.5)},
        {"g-6.5k_T0.1", theta_sweep({mode(nu, -6.5e3)}, 12.0e6, 0.1, 0.5, 1.5)},
        {"g-5k_T0.01", theta_sweep({mode(nu, -5.0e3)}, 12.0e6, 0.01, 0.5, 1.5)},
        {"g0_T0.01", theta_sweep({mode(nu, 0.0)}, 12.0e6, 0.01, 0.5, 1.5)},
    };
    return p;
}

Preset fig3() {
    Preset p;
    p.name = "fig3";
    p.description = "single flexural mode: acoustomechanical eta^- and E_N versus theta/nu";
    p.provenance =
        "Gamma = 6.1 MHz, omega_ph = 477 Hz, Omega = 12 MHz, Delta = 45 MHz, eta = 0.15, kappa = 2 Hz, "
        "nu = 2 MHz; solid T = 0.01 K, dashed T = 0.1 K; g = -6.5 kHz and g = -5 kHz";
    const double nu = 2.0e6;
    const std::vector<Bipartition> bip = {Bipartition::mech_phonon(0)};
    for (double g : {-6.5e3, -5.0e3}) {
        for (double t : {0.01, 0.1}) {
            const std::string label = std::string(g == -6.5e3 ? "g-6.5k" : "g-5k") + (t == 0.01 ? "_T0.01" : "_T0.1");
            p.series.push_back({label, theta_sweep({mode(nu, g)}, 12.0e6, t, 0.5, 1.5, 0, bip)});
        }
    }
    return p;
}

Preset fig4() {
    Preset p;
    p.name = "fig4";
    p.description = "two side-by-side membranes, nu2 = 0.99 nu1: m_eff and mechanical E_N versus theta/nu1";
    p.provenance =
        "Gamma = 6.1 MHz, omega_ph = 477 Hz, Delta = 45 MHz, eta = 0.15, kappa = 2 Hz, nu1 = 2 MHz, "
        "nu2 = 0.99 nu1; top (a,b): T = 0.1 K, Omega = 17.5 MHz, g1 ~ g2 ~ 43 kHz; "
        "bottom (c,d): T = 0.01 K, Omega = 12 MHz, g1 ~ g2 ~ 40 kHz";
    const double nu1 = 2.0e6;
    const double nu2 = 0.99 * nu1;
    const std::vector<Bipartition> bip = {Bipartition::mech_mech(0, 1)};
    p.series = {
        {"bottom_T0.01", theta_sweep({mode(nu1, 40.0e3), mode(nu2, 40.0e3)}, 12.0e6, 0.01, 0.98, 1.01, 0, bip)},
        {"top_T0.1", theta_sweep({mode(nu1, 43.0e3), mode(nu2, 43.0e3)}, 17.5e6, 0.1, 0.98, 1.01, 0, bip)},
    };
    return p;
}

Preset fig5() {
    Preset p;
    p.name = "fig5";
    p.description = "three side-by-side membranes: m_eff and pairwise mechanical E_N versus theta/nu2";
    p.provenance =
        "Gamma = 6.1 MHz, omega_ph = 477 Hz, Omega = 17.5 MHz, Delta = 45 MHz, eta = 0.15, kappa = 2 Hz, "
        "nu2 = 2 MHz, nu1 = 0.999 nu2, nu3 = 1.001 nu2, g_{1,2,3} ~ -4.8 kHz, T = 0.01 K";
    const double nu2 = 2.0e6;
    const std::vector<Bipartition> bip = {Bipartition::mech_mech(0, 1), Bipartition::mech_mech(0, 2),
                                          Bipartition::mech_mech(1, 2)};
    p.series = {
        {"T0.01", theta_sweep({mode(0.999 * nu2, -4.8e3), mode(nu2, -4.8e3), mode(1.001 * nu2, -4.8e3)}, 17.5e6,
                              0.01, 0.995, 1.005, 1, bip)},
    };
    return p;
}

std::vector<MechanicalMode> membrane_pair() {
    const double nu1 = 2.0e6;
    return {mode(nu1, -6.5e3), mode(1.5 * nu1, -6.5e3)};
}

constexpr const char* kMembranePairProvenance =
    "Gamma = 6.1 MHz, omega_ph = 477 Hz, Omega = 12 MHz, Delta = 45 MHz, eta = 0.15, kappa = 2 Hz, "
    "nu1 = 2 MHz, nu2 = 1.5 nu1, T = 0.01 K, g1 ~ g2 ~ -6.5 kHz";

Preset fig_b1() {
    Preset p;
    p.name = "figB1";
    p.description = "two flexural modes of one membrane (nu2 = 1.5 nu1): m_eff versus theta/nu1, "
                    "with the single-mode reference curve";
    p.provenance = std::string(kMembranePairProvenance) + "; dashed: single-mode case";
    p.series = {
        {"two_modes", theta_sweep(membrane_pair(), 12.0e6, 0.01, 0.5, 2.0)},
        {"single_mode", theta_sweep({membrane_pair().front()}, 12.0e6, 0.01, 0.5, 2.0)},
    };
    return p;
}

Preset fig_b2() {
    Preset p;
    p.name = "figB2";
    p.description = "two flexural modes of one membrane: acoustomechanical E_N of both modes versus theta/nu1";
    p.provenance = kMembranePairProvenance;
    p.series = {{"two_modes", theta_sweep(membrane_pair(), 12.0e6, 0.01, 0.5, 2.0, 0,
                                          {Bipartition::mech_phonon(0), Bipartition::mech_phonon(1),
                                           Bipartition::mech_mech(0, 1)})}};
    return p;
}

Preset fig_b3() {
    Preset p;
    p.name = "figB3";
    p.description = "two flexural modes of one membrane: mechanical E_N versus theta/nu1";
    p.provenance = kMembranePairProvenance;
    p.series = {{"two_modes", theta_sweep(membrane_pair(), 12.0e6, 0.01, 0.5, 2.0, 0,
                                          {Bipartition::mech_mech(0, 1), Bipartition::mech_phonon(0),
                                           Bipartition::mech_phonon(1)})}};
    return p;
}

Preset fig_b_density() {
    Preset p;
    p.name = "figB_density";
    p.description = "single mode: m_eff over (theta/nu, g) for four bath temperatures";
    p.provenance =
        "Gamma = 6.1 MHz, omega_ph = 477 Hz, Omega = 12 MHz, Delta = 45 MHz, eta = 0.15, kappa = 2 Hz, "
        "nu = 2 MHz; a) T = 100 K, b) T = 10 K, c) T = 0.1 K, d) T = 0.01 K "
        "(initial occupations 10^6, 10^5, 10^3, 10^2); guide lines g = -6.5 kHz, g = -5 kHz";
    const double nu = 2.0e6;
    const std::vector<std::pair<std::string, double>> panels = {
        {"d_T0.01", 0.01}, {"c_T0.1", 0.1}, {"b_T10", 10.0}, {"a_T100", 100.0}};
    for (const auto& [label, t] : panels) {
        SweepSpec s = theta_sweep({mode(nu, -6.5e3)}, 12.0e6, t, 0.5, 1.5);
        s.outer = OuterAxis{SweepAxis::Coupling, linspace(-10.0e3, 0.0, 41)};
        p.series.push_back({label, std::move(s)});
    }
    return p;
}

}  // namespace

const Series& Preset::find_series(std::string_view label) const {
    for (const auto& s : series)
        if (s.label == label) return s;
    std::string known;
    for (const auto& s : series) known += (known.empty() ? "" : ", ") + s.label;
    throw ConfigError("preset '" + name + "' has no series '" + std::string(label) + "' (available: " + known + ")");
}

const std::vector<Preset>& list_presets() {
    static const std::vector<Preset> presets = {fig2(),  fig3(),  fig4(),  fig5(),
                                                fig_b1(), fig_b2(), fig_b3(), fig_b_density()};
    return presets;
}

const Preset& find_preset(std::string_view name) {
    for (const auto& p : list_presets())
        if (p.name == name) return p;
    std::string known;
    for (const auto& p : list_presets()) known += (known.empty() ? "" : ", ") + p.name;
    throw ConfigError("unknown scenario '" + std::string(name) + "' (available: " + known + ")");
}

}  // namespace flexcool
