#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "flexcool/dynamics.hpp"

namespace flexcool {

// Stationary second moments V_lm = <u_l u_m + u_m u_l>/2 in the LinearSystem
// ordering. Symmetrised on construction.
class CovarianceMatrix {
public:
    CovarianceMatrix(Eigen::MatrixXd v, int n_modes);

    const Eigen::MatrixXd& matrix() const { return v_; }
    int n_modes() const { return n_modes_; }
    int dim() const { return static_cast<int>(v_.rows()); }
    double operator()(int r, int c) const { return v_(r, c); }

    // ||A V + V A^T + D||_F / ||D||_F, or the absolute norm when D = 0.
    double relative_residual(const LinearSystem& system) const;

private:
    Eigen::MatrixXd v_;
    int n_modes_;
};

// Unique solution of A V + V A^T = -D. Throws UnstableSystem when A is not
// Hurwitz, SolverDegenerate when the Lyapunov operator is numerically singular.
CovarianceMatrix solve_lyapunov(const LinearSystem& system);

// Solves A V + V A^T = -D for a bare pair of matrices. The caller is
// responsible for stability; only degeneracy is detected.
Eigen::MatrixXd solve_lyapunov_dense(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d);

// m_eff = (<dq_j^2> + <dp_j^2> - 1) / 2
double occupation(const CovarianceMatrix& cov, int mode_index);
std::vector<double> occupations(const CovarianceMatrix& cov);

// (<dX^2>, <dY^2>)
std::pair<double, double> phonon_variances(const CovarianceMatrix& cov);

// Moduli of the eigenvalues of i Omega V, one per mode (ascending). A valid
// quantum state has all of them >= 1/2.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov);

}  // namespace flexcool
