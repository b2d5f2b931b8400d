#pragma once

#include <Eigen/Dense>
#include <vector>

#include "flexcool/params.hpp"

namespace flexcool {

// Linearised fluctuation dynamics u' = A u + n with the quadrature ordering
// (dq_1, dp_1, ..., dq_N, dp_N, dX, dY). Indices are 0-based.
struct LinearSystem {
    int n_modes = 0;
    Eigen::MatrixXd drift;
    Eigen::MatrixXd diffusion;
    std::vector<double> mode_frequencies;

    int dim() const { return 2 * n_modes + 2; }
    static int q_index(int j) { return 2 * j; }
    static int p_index(int j) { return 2 * j + 1; }
    int x_index() const { return 2 * n_modes; }
    int y_index() const { return 2 * n_modes + 1; }
};

Eigen::MatrixXd build_drift(const SystemConfig& config, const EffectiveParams& eff);

// Diagonal; kappa_j (2 m_j + 1) on the dp_j entries. The phonon entries are
// zero unless config.phonon_vacuum_noise is set, in which case they are gamma.
Eigen::MatrixXd build_diffusion(const SystemConfig& config);

// Drift and diffusion together, with effective parameters derived from config.
LinearSystem build_system(const SystemConfig& config);
LinearSystem build_system(const SystemConfig& config, const EffectiveParams& eff);

}  // namespace flexcool
