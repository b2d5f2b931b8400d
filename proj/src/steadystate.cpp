#include "flexcool/steadystate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flexcool/errors.hpp"
#include "flexcool/stability.hpp"

namespace flexcool {

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Reciprocal condition below which the Lyapunov operator counts as singular.
constexpr double kDegenerateRcond = 1e-15;
constexpr int kRefinementSteps = 3;

// Column-major vec: vec(A V + V A^T) = (I (x) A + A (x) I) vec(V).
Eigen::MatrixXd lyapunov_operator(const Eigen::MatrixXd& a) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n * n, n * n);
    for (Eigen::Index col = 0; col < n; ++col) {
        for (Eigen::Index row = 0; row < n; ++row) {
            const Eigen::Index out = row + col * n;
            for (Eigen::Index k = 0; k < n; ++k) {
                op(out, k + col * n) += a(row, k);  // (A V)(row, col)
                op(out, row + k * n) += a(col, k);  // (V A^T)(row, col)
            }
        }
    }
    return op;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd v, int n_modes)
    : v_(std::move(v)), n_modes_(n_modes) {
    if (v_.rows() != v_.cols() || v_.rows() != 2 * n_modes + 2)
        throw ConfigError("CovarianceMatrix: dimension must be 2N+2 square");
    v_ = 0.5 * (v_ + v_.transpose()).eval();
}

double CovarianceMatrix::relative_residual(const LinearSystem& system) const {
    // Accumulated in extended precision so the check measures V, not its own round-off.
    const LongMatrix a = system.drift.cast<long double>();
    const LongMatrix v = v_.cast<long double>();
    const LongMatrix r = a * v + v * a.transpose() + system.diffusion.cast<long double>();
    const double rnorm = static_cast<double>(r.norm());
    const double dnorm = system.diffusion.norm();
    return dnorm > 0.0 ? rnorm / dnorm : rnorm;
}

Eigen::MatrixXd solve_lyapunov_dense(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d) {
    if (a.rows() != a.cols() || d.rows() != a.rows() || d.cols() != a.cols())
        throw ConfigError("solve_lyapunov: A and D must be square and of equal size");
    const Eigen::Index n = a.rows();
    if (d.isZero(0.0)) return Eigen::MatrixXd::Zero(n, n);

    // Rates span many decades (nu ~ MHz, kappa ~ Hz); solve in units of max|A|.
    const double scale = a.cwiseAbs().maxCoeff();
    if (!(scale > 0.0)) throw SolverDegenerate("solve_lyapunov: drift matrix is zero");
    const Eigen::MatrixXd as = a / scale;
    const Eigen::MatrixXd ds = d / scale;

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(lyapunov_operator(as));
    const double rcond = lu.rcond();
    if (!(rcond > kDegenerateRcond))
        throw SolverDegenerate("solve_lyapunov: Lyapunov operator is singular (rcond=" +
                               std::to_string(rcond) + ")");

    Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(ds.data(), n * n);
    Eigen::VectorXd x = lu.solve(rhs);

    // Iterative refinement with the residual accumulated in extended precision.
    const LongMatrix al = as.cast<long double>();
    const LongMatrix dl = ds.cast<long double>();
    for (int step = 0; step < kRefinementSteps; ++step) {
        const LongMatrix v = Eigen::Map<const Eigen::MatrixXd>(x.data(), n, n).cast<long double>();
        const LongMatrix r = -dl - (al * v + v * al.transpose());
        const Eigen::MatrixXd rd = r.cast<double>();
        x += lu.solve(Eigen::Map<const Eigen::VectorXd>(rd.data(), n * n));
    }

    Eigen::MatrixXd v = Eigen::Map<const Eigen::MatrixXd>(x.data(), n, n);
    return 0.5 * (v + v.transpose());
}

CovarianceMatrix solve_lyapunov(const LinearSystem& system) {
    const StabilityReport report = spectral_stability(system);
    if (!report.stable)
        throw UnstableSystem("solve_lyapunov: drift matrix is not Hurwitz (max Re(lambda) = " +
                             std::to_string(report.max_real_part) + ")");
    return CovarianceMatrix(solve_lyapunov_dense(system.drift, system.diffusion), system.n_modes);
}

double occupation(const CovarianceMatrix& cov, int mode_index) {
    if (mode_index < 0 || mode_index >= cov.n_modes())
        throw std::out_of_range("occupation: mode index " + std::to_string(mode_index) +
                                " out of range for " + std::to_string(cov.n_modes()) + " modes");
    const int iq = LinearSystem::q_index(mode_index);
    const int ip = LinearSystem::p_index(mode_index);
    return 0.5 * (cov(iq, iq) + cov(ip, ip) - 1.0);
}

std::vector<double> occupations(const CovarianceMatrix& cov) {
    std::vector<double> out;
    out.reserve(cov.n_modes());
    for (int j = 0; j < cov.n_modes(); ++j) out.push_back(occupation(cov, j));
    return out;
}

std::pair<double, double> phonon_variances(const CovarianceMatrix& cov) {
    const int ix = 2 * cov.n_modes();
    return {cov(ix, ix), cov(ix + 1, ix + 1)};
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov) {
    const int n = cov.dim();
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; k += 2) {
        omega(k, k + 1) = 1.0;
        omega(k + 1, k) = -1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(omega * cov.matrix(), false);
    if (solver.info() != Eigen::Success)
        throw EigenFailure("symplectic_eigenvalues: eigenvalue iteration did not converge");
    std::vector<double> moduli;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
        moduli.push_back(std::abs(solver.eigenvalues()[k]));
    std::sort(moduli.begin(), moduli.end());
    std::vector<double> out;
    for (std::size_t k = 0; k < moduli.size(); k += 2) out.push_back(moduli[k]);
    return out;
}

}  // namespace flexcool
