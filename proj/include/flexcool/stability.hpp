#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "flexcool/dynamics.hpp"

namespace flexcool {

struct StabilityReport {
    bool stable = false;
    double max_real_part = 0.0;
    std::optional<double> decay_rate;       // -max_real_part when stable
    std::optional<double> relaxation_time;  // 1 / decay_rate when stable
    std::vector<std::complex<double>> eigenvalues;
};

// Relative tolerance: a system is stable iff every eigenvalue has real part
// below -kStabilityTolerance * max(nu_j). Marginal systems are unstable.
inline constexpr double kStabilityTolerance = 1e-9;

StabilityReport spectral_stability(const LinearSystem& system);

// Same test on a bare drift matrix with an absolute tolerance.
StabilityReport spectral_stability(const Eigen::MatrixXd& drift, double tolerance);

// The two Routh-Hurwitz inequalities for one mechanical mode:
//   nu^2 (theta^2 + gamma^2) - 4 nu |alpha|^2 g^2 theta > 0
//   2 gamma kappa [theta^4 + theta^2 (kappa^2 + 2 kappa gamma + 2 gamma^2 - 2 nu^2)
//                  + (kappa gamma + gamma^2 + nu^2)^2]
//     + 4 nu |alpha|^2 g^2 theta (kappa + 2 gamma)^2 > 0
struct RouthHurwitzTerms {
    double first = 0.0;
    double second = 0.0;
    bool holds() const { return first > 0.0 && second > 0.0; }
};

// Throws ConfigError unless the config has exactly one mechanical mode.
RouthHurwitzTerms routh_hurwitz_terms(const SystemConfig& config, const EffectiveParams& eff);
bool routh_hurwitz_n1(const SystemConfig& config, const EffectiveParams& eff);

}  // namespace flexcool
