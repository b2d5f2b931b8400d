#include "flexcool/params.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "flexcool/errors.hpp"

namespace flexcool {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw ConfigError(what);
}

}  // namespace

std::vector<std::string> validate(const SystemConfig& config) {
    const auto& a = config.atoms;
    require(std::isfinite(a.gamma_sp) && a.gamma_sp > 0.0, "atoms.gamma_sp must be > 0");
    require(std::isfinite(a.rabi) && a.rabi >= 0.0, "atoms.rabi must be >= 0");
    require(std::isfinite(a.detuning), "atoms.detuning must be finite");
    require(a.lamb_dicke > 0.0 && a.lamb_dicke < 1.0, "atoms.lamb_dicke must lie in (0, 1)");
    require(std::isfinite(a.omega_ph), "atoms.omega_ph must be finite");
    require(!config.modes.empty(), "at least one mechanical mode is required");
    require(std::isfinite(config.temperature) && config.temperature > 0.0,
            "bath.temperature must be > 0");
    require(std::isfinite(config.theta), "control.theta must be finite");

    std::vector<std::string> warnings;
    for (std::size_t j = 0; j < config.modes.size(); ++j) {
        const auto& m = config.modes[j];
        const std::string tag = "modes[" + std::to_string(j) + "]";
        require(std::isfinite(m.nu) && m.nu > 0.0, tag + ".nu must be > 0");
        require(std::isfinite(m.kappa) && m.kappa > 0.0, tag + ".kappa must be > 0");
        require(std::isfinite(m.g), tag + ".g must be finite");
        if (m.quality() < 100.0) {
            std::ostringstream os;
            os << tag << ": quality factor " << m.quality() << " < 100, linearised model is marginal";
            warnings.push_back(os.str());
        }
    }
    return warnings;
}

EffectiveParams derive_effective(const SystemConfig& config) {
    const auto& a = config.atoms;
    if (!(a.gamma_sp > 0.0)) throw ConfigError("derive_effective: gamma_sp must be > 0");

    const double omega2 = a.rabi * a.rabi;
    const double denom = 4.0 * a.detuning * a.detuning + a.gamma_sp * a.gamma_sp;

    EffectiveParams eff;
    eff.xi = a.lamb_dicke * omega2 * a.detuning / denom;
    eff.gamma_eff = a.gamma_sp * a.lamb_dicke * a.lamb_dicke * omega2 / (2.0 * denom);
    eff.omega_eff = a.omega_ph - a.lamb_dicke * a.lamb_dicke * omega2 * a.detuning / denom +
                    std::accumulate(config.cp_shifts.begin(), config.cp_shifts.end(), 0.0);

    const double modulus = std::hypot(config.theta, eff.gamma_eff);
    eff.alpha_abs = eff.xi == 0.0 ? 0.0 : std::abs(eff.xi) / modulus;
    return eff;
}

double thermal_occupation(double nu, double temperature) {
    if (!(nu > 0.0)) throw ConfigError("thermal_occupation: nu must be > 0");
    if (!(temperature > 0.0)) throw ConfigError("thermal_occupation: temperature must be > 0");
    const double x = constants::kHbar * 2.0 * constants::kPi * nu /
                     (constants::kBoltzmann * temperature);
    return 1.0 / std::expm1(x);
}

std::vector<double> steady_positions(const SystemConfig& config, const EffectiveParams& eff) {
    std::vector<double> q;
    q.reserve(config.modes.size());
    const double a2 = eff.alpha_abs * eff.alpha_abs;
    for (const auto& m : config.modes) q.push_back(std::sqrt(2.0) * m.g * a2 / m.nu);
    return q;
}

}  // namespace flexcool
