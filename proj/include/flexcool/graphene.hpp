#pragma once

#include <optional>

namespace flexcool::graphene {

// Kirchhoff-plate description of a clamped graphene flake.
struct MembraneMaterial {
    double young = 1.0e12;           // Pa
    double poisson = 0.17;
    double thickness = 3.35e-10;     // m
    double areal_density = 7.6e-7;   // kg/m^2, monolayer graphene
    double clamping_tension = 0.0;   // N/m, equal along x and y
};

// Non-retarded Casimir-Polder setup. Lengths in micrometres.
struct CasimirSetup {
    double c3 = -215.65;     // Hz um^3, rubidium near graphene
    double z_a = 1.0;        // atom-surface distance, um
    double n0 = 0.0;         // areal atomic density, um^-2
    double osc_mass = 0.0;   // kg, the mass entering the zero-point length
    std::optional<double> omega_eg;  // atomic transition, rad/s; enables the validity check
};

void validate(const MembraneMaterial& material);

double bending_modulus(const MembraneMaterial& material);

// nu(k) = sqrt(D/rho k^4 + 2 t_cl/rho k^2)
double flexural_frequency(double k, const MembraneMaterial& material);

double cp_potential(const CasimirSetup& setup);

// Fundamental CP frequency 2 pi C3 exp(-q z_A) / z_A, q in um^-1.
double cp_frequency(double q, const CasimirSetup& setup);

// g_j = 2 q_j sqrt(hbar / (2 m 2 pi nu_j)) n0 omega_CP_j. The zero-point
// length is expressed in um so that q_j * length is dimensionless.
double coupling_strength(double q, double nu, const CasimirSetup& setup);

// z_A << c / omega_eg, read as z_A < 0.1 c / omega_eg. True when omega_eg is unset.
bool nonretarded_valid(const CasimirSetup& setup);

}  // namespace flexcool::graphene
