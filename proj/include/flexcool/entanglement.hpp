#pragma once

#include <Eigen/Dense>

#include "flexcool/steadystate.hpp"

namespace flexcool {

// Two-mode Gaussian covariance [[A, C], [C^T, B]] with 2x2 blocks.
struct BipartiteCovariance {
    Eigen::Matrix2d a_block = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d b_block = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d c_block = Eigen::Matrix2d::Zero();

    Eigen::Matrix4d assembled() const;
    BipartiteCovariance swapped() const { return {b_block, a_block, c_block.transpose()}; }

    static BipartiteCovariance from_matrix(const Eigen::Matrix4d& v);
};

// Mechanical modes i and j (rows/columns 2i, 2i+1, 2j, 2j+1).
BipartiteCovariance reduce_mech_mech(const CovarianceMatrix& cov, int i, int j);

// Mechanical mode i as first party, the atomic phonon as second.
BipartiteCovariance reduce_mech_phonon(const CovarianceMatrix& cov, int i);

// Smallest symplectic eigenvalue of the partial transpose,
//   eta^- = sqrt((Sigma - sqrt(Sigma^2 - 4 det V)) / 2),
//   Sigma = det A + det B - 2 det C,
// evaluated as sqrt(2 det V / (Sigma + sqrt(Sigma^2 - 4 det V))) so that it stays
// accurate when det V << Sigma^2. Throws NonPhysical when Sigma^2 < 4 det V
// (or det V < 0) beyond round-off.
double eta_minus(const BipartiteCovariance& bip);

// Entangled iff eta^- < 1/2 by more than this margin.
inline constexpr double kEntanglementMargin = 1e-12;

// E_N = max(0, -ln(2 eta^-)). Product states (C = 0) report 0.
double log_negativity(const BipartiteCovariance& bip);
double log_negativity_from_eta(double eta);

struct EntanglementMeasures {
    double eta_minus = 0.0;
    double log_negativity = 0.0;
};
EntanglementMeasures entanglement(const BipartiteCovariance& bip);

}  // namespace flexcool
