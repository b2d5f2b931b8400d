#include "flexcool/stability.hpp"

#include <algorithm>
#include <limits>

#include "flexcool/errors.hpp"

namespace flexcool {

StabilityReport spectral_stability(const Eigen::MatrixXd& drift, double tolerance) {
    if (drift.rows() != drift.cols() || drift.rows() == 0)
        throw ConfigError("spectral_stability: drift matrix must be square and non-empty");

    Eigen::EigenSolver<Eigen::MatrixXd> solver(drift, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw EigenFailure("spectral_stability: eigenvalue iteration did not converge");

    StabilityReport report;
    const auto& ev = solver.eigenvalues();
    report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    report.max_real_part = -std::numeric_limits<double>::infinity();
    for (const auto& z : report.eigenvalues) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw EigenFailure("spectral_stability: non-finite eigenvalue");
        report.max_real_part = std::max(report.max_real_part, z.real());
    }
    report.stable = report.max_real_part < -tolerance;
    if (report.stable) {
        report.decay_rate = -report.max_real_part;
        report.relaxation_time = 1.0 / *report.decay_rate;
    }
    return report;
}

StabilityReport spectral_stability(const LinearSystem& system) {
    double scale = 0.0;
    for (double nu : system.mode_frequencies) scale = std::max(scale, std::abs(nu));
    if (scale == 0.0) scale = system.drift.cwiseAbs().maxCoeff();
    return spectral_stability(system.drift, kStabilityTolerance * scale);
}

RouthHurwitzTerms routh_hurwitz_terms(const SystemConfig& config, const EffectiveParams& eff) {
    if (config.modes.size() != 1)
        throw ConfigError("routh_hurwitz_n1: requires exactly one mechanical mode, got " +
                          std::to_string(config.modes.size()));
    const auto& m = config.modes.front();
    const double nu = m.nu;
    const double kappa = m.kappa;
    const double gamma = eff.gamma_eff;
    const double theta = config.theta;
    const double coupling = 4.0 * nu * eff.alpha_abs * eff.alpha_abs * m.g * m.g * theta;

    const double theta2 = theta * theta;
    const double tail = kappa * gamma + gamma * gamma + nu * nu;
    const double bracket = theta2 * theta2 +
                           theta2 * (kappa * kappa + 2.0 * kappa * gamma + 2.0 * gamma * gamma - 2.0 * nu * nu) +
                           tail * tail;
    const double k2g = kappa + 2.0 * gamma;

    RouthHurwitzTerms t;
    t.first = nu * nu * (theta2 + gamma * gamma) - coupling;
    t.second = 2.0 * gamma * kappa * bracket + coupling * k2g * k2g;
    return t;
}

bool routh_hurwitz_n1(const SystemConfig& config, const EffectiveParams& eff) {
    return routh_hurwitz_terms(config, eff).holds();
}

}  // namespace flexcool
