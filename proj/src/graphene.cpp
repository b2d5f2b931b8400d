#include "flexcool/graphene.hpp"

#include <cmath>

#include "flexcool/errors.hpp"
#include "flexcool/params.hpp"

namespace flexcool::graphene {

void validate(const MembraneMaterial& m) {
    if (!(m.young > 0.0)) throw ConfigError("membrane: young must be > 0");
    if (!(m.poisson >= 0.0 && m.poisson < 0.5)) throw ConfigError("membrane: poisson must lie in [0, 0.5)");
    if (!(m.thickness > 0.0)) throw ConfigError("membrane: thickness must be > 0");
    if (!(m.areal_density > 0.0)) throw ConfigError("membrane: areal_density must be > 0");
    if (!(m.clamping_tension >= 0.0)) throw ConfigError("membrane: clamping_tension must be >= 0");
}

double bending_modulus(const MembraneMaterial& m) {
    return m.young * m.thickness * m.thickness * m.thickness / (12.0 * (1.0 - m.poisson * m.poisson));
}

double flexural_frequency(double k, const MembraneMaterial& m) {
    if (k < 0.0) throw ConfigError("flexural_frequency: k must be >= 0");
    const double k2 = k * k;
    return std::sqrt(bending_modulus(m) / m.areal_density * k2 * k2 +
                     2.0 * m.clamping_tension / m.areal_density * k2);
}

double cp_potential(const CasimirSetup& s) {
    if (!(s.z_a > 0.0)) throw ConfigError("cp_potential: z_a must be > 0");
    return s.c3 / (s.z_a * s.z_a * s.z_a);
}

double cp_frequency(double q, const CasimirSetup& s) {
    if (!(s.z_a > 0.0)) throw ConfigError("cp_frequency: z_a must be > 0");
    return 2.0 * constants::kPi * s.c3 * std::exp(-q * s.z_a) / s.z_a;
}

double coupling_strength(double q, double nu, const CasimirSetup& s) {
    if (!(nu > 0.0)) throw ConfigError("coupling_strength: nu must be > 0");
    if (!(s.osc_mass > 0.0)) throw ConfigError("coupling_strength: osc_mass must be > 0");
    const double zpf_m = std::sqrt(constants::kHbar / (2.0 * s.osc_mass * 2.0 * constants::kPi * nu));
    const double zpf_um = zpf_m * 1.0e6;
    return 2.0 * q * zpf_um * s.n0 * cp_frequency(q, s);
}

bool nonretarded_valid(const CasimirSetup& s) {
    if (!s.omega_eg) return true;
    const double wavelength_um = constants::kSpeedOfLight / *s.omega_eg * 1.0e6;
    return s.z_a < 0.1 * wavelength_um;
}

}  // namespace flexcool::graphene
