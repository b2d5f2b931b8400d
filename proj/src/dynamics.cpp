#include "flexcool/dynamics.hpp"

#include "flexcool/errors.hpp"

namespace flexcool {

Eigen::MatrixXd build_drift(const SystemConfig& config, const EffectiveParams& eff) {
    const int n = static_cast<int>(config.modes.size());
    const int dim = 2 * n + 2;
    const int ix = 2 * n;
    const int iy = 2 * n + 1;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
        const auto& m = config.modes[j];
        const int iq = LinearSystem::q_index(j);
        const int ip = LinearSystem::p_index(j);
        const double coupling = 2.0 * eff.alpha_abs * m.g;

        a(iq, ip) = -m.nu;
        a(ip, iq) = m.nu;
        a(ip, ip) = -m.kappa;
        a(ip, ix) = -coupling;
        // dY' = ... + sum_j 2|alpha| g_j dq_j
        a(iy, iq) = coupling;
    }
    a(ix, ix) = -eff.gamma_eff;
    a(ix, iy) = config.theta;
    a(iy, ix) = -config.theta;
    a(iy, iy) = -eff.gamma_eff;
    return a;
}

Eigen::MatrixXd build_diffusion(const SystemConfig& config) {
    const int n = static_cast<int>(config.modes.size());
    const int dim = 2 * n + 2;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
        const auto& m = config.modes[j];
        const double occ = thermal_occupation(m.nu, config.temperature);
        d(LinearSystem::p_index(j), LinearSystem::p_index(j)) = m.kappa * (2.0 * occ + 1.0);
    }
    if (config.phonon_vacuum_noise) {
        const double gamma = derive_effective(config).gamma_eff;
        d(2 * n, 2 * n) = gamma;
        d(2 * n + 1, 2 * n + 1) = gamma;
    }
    return d;
}

LinearSystem build_system(const SystemConfig& config) {
    return build_system(config, derive_effective(config));
}

LinearSystem build_system(const SystemConfig& config, const EffectiveParams& eff) {
    validate(config);
    LinearSystem sys;
    sys.n_modes = static_cast<int>(config.modes.size());
    sys.drift = build_drift(config, eff);
    sys.diffusion = build_diffusion(config);
    sys.mode_frequencies.reserve(config.modes.size());
    for (const auto& m : config.modes) sys.mode_frequencies.push_back(m.nu);
    return sys;
}

}  // namespace flexcool
