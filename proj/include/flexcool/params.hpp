#pragma once

#include <string>
#include <vector>

namespace flexcool {

// All frequencies are ordinary frequencies in Hz. Only the thermal
// occupation needs an absolute energy scale and converts via 2*pi.

namespace constants {
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
}  // namespace constants

struct AtomicParams {
    double gamma_sp = 0.0;    // spontaneous emission rate
    double rabi = 0.0;        // Rabi frequency
    double detuning = 0.0;    // laser - transition detuning, either sign
    double lamb_dicke = 0.0;  // in (0, 1)
    double omega_ph = 0.0;    // bare phonon frequency
};

struct MechanicalMode {
    double nu = 0.0;     // flexural frequency
    double kappa = 0.0;  // energy dissipation rate, nu / Q
    double g = 0.0;      // atom-membrane coupling, sign unrestricted

    double quality() const { return nu / kappa; }
};

struct SystemConfig {
    AtomicParams atoms;
    std::vector<MechanicalMode> modes;
    double temperature = 0.0;  // bath temperature, K
    double theta = 0.0;        // shifted phonon detuning, the control knob
    // Optional Casimir-Polder shifts entering omega_eff only; empty if unknown.
    std::vector<double> cp_shifts;
    // Adds vacuum noise gamma on both phonon quadratures. Off by default:
    // the reference model leaves the phonon quadratures noiseless.
    bool phonon_vacuum_noise = false;

    std::size_t n_modes() const { return modes.size(); }
};

struct EffectiveParams {
    double xi = 0.0;         // effective drive
    double gamma_eff = 0.0;  // effective phonon damping
    double omega_eff = 0.0;  // informational; the dynamics uses theta
    double alpha_abs = 0.0;  // steady-state phonon amplitude |alpha|
};

// Throws ConfigError on a violated invariant. Returns soft warnings
// (low quality factor) that callers may surface.
std::vector<std::string> validate(const SystemConfig& config);

// Reduced quantities after adiabatic elimination of the excited state.
// |alpha| is computed from the configured theta; no self-consistent
// (alpha, theta) fixed point is solved.
EffectiveParams derive_effective(const SystemConfig& config);

// Bose-Einstein occupation of a mode of ordinary frequency nu (Hz).
double thermal_occupation(double nu, double temperature);

// Mean mechanical displacements q_j^s = sqrt(2) g_j |alpha|^2 / nu_j.
// Momenta vanish in the steady state and are not returned.
std::vector<double> steady_positions(const SystemConfig& config, const EffectiveParams& eff);

}  // namespace flexcool
