#include "flexcool/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "flexcool/errors.hpp"

namespace flexcool {

namespace {

constexpr double kRoundoff = 1e-10;
constexpr double kProductTolerance = 1e-12;

Eigen::Matrix2d block(const Eigen::MatrixXd& v, int r, int c) {
    return v.block<2, 2>(r, c);
}

void check_mode(const CovarianceMatrix& cov, int i, const char* what) {
    if (i < 0 || i >= cov.n_modes())
        throw std::out_of_range(std::string(what) + ": mode index " + std::to_string(i) +
                                " out of range for " + std::to_string(cov.n_modes()) + " modes");
}

bool is_product(const BipartiteCovariance& bip) {
    const double local = std::max(bip.a_block.norm(), bip.b_block.norm());
    return bip.c_block.norm() <= kProductTolerance * local;
}

}  // namespace

Eigen::Matrix4d BipartiteCovariance::assembled() const {
    Eigen::Matrix4d v;
    v << a_block, c_block, c_block.transpose(), b_block;
    return v;
}

BipartiteCovariance BipartiteCovariance::from_matrix(const Eigen::Matrix4d& v) {
    return {v.block<2, 2>(0, 0), v.block<2, 2>(2, 2), v.block<2, 2>(0, 2)};
}

BipartiteCovariance reduce_mech_mech(const CovarianceMatrix& cov, int i, int j) {
    check_mode(cov, i, "reduce_mech_mech");
    check_mode(cov, j, "reduce_mech_mech");
    if (i == j) throw std::invalid_argument("reduce_mech_mech: the two parties must differ");
    const auto& v = cov.matrix();
    return {block(v, 2 * i, 2 * i), block(v, 2 * j, 2 * j), block(v, 2 * i, 2 * j)};
}

BipartiteCovariance reduce_mech_phonon(const CovarianceMatrix& cov, int i) {
    check_mode(cov, i, "reduce_mech_phonon");
    const auto& v = cov.matrix();
    const int ph = 2 * cov.n_modes();
    return {block(v, 2 * i, 2 * i), block(v, ph, ph), block(v, 2 * i, ph)};
}

double eta_minus(const BipartiteCovariance& bip) {
    // Extended precision: det V cancels heavily for strongly squeezed states.
    using Real = long double;
    using Mat4 = Eigen::Matrix<Real, 4, 4>;
    using Mat2 = Eigen::Matrix<Real, 2, 2>;
    const Mat4 v = bip.assembled().cast<Real>();
    const Real scale = v.cwiseAbs().maxCoeff();
    if (!std::isfinite(static_cast<double>(scale))) throw NonPhysical("eta_minus: non-finite covariance entries");
    if (scale == 0.0L) return 0.0;

    const Real s2 = scale * scale;
    const Mat2 a = bip.a_block.cast<Real>();
    const Mat2 b = bip.b_block.cast<Real>();
    const Mat2 c = bip.c_block.cast<Real>();
    const Real sigma = a.determinant() + b.determinant() - 2.0L * c.determinant();
    Real det = v.determinant();

    if (det < -kRoundoff * s2 * s2)
        throw NonPhysical("eta_minus: covariance has negative determinant " + std::to_string(static_cast<double>(det)));
    det = std::max(det, 0.0L);
    if (sigma < -kRoundoff * s2)
        throw NonPhysical("eta_minus: Sigma = " + std::to_string(static_cast<double>(sigma)) + " < 0");

    Real disc = sigma * sigma - 4.0L * det;
    if (disc < -kRoundoff * std::max(sigma * sigma, s2 * s2))
        throw NonPhysical("eta_minus: Sigma^2 < 4 det V");
    disc = std::max(disc, 0.0L);

    const Real denom = sigma + std::sqrt(disc);
    if (denom <= 0.0L) return 0.0;
    return static_cast<double>(std::sqrt(2.0L * det / denom));
}

double log_negativity_from_eta(double eta) {
    if (eta < 0.5 - kEntanglementMargin) {
        if (eta <= 0.0) return std::numeric_limits<double>::infinity();
        return -std::log(2.0 * eta);
    }
    return 0.0;
}

double log_negativity(const BipartiteCovariance& bip) {
    return entanglement(bip).log_negativity;
}

EntanglementMeasures entanglement(const BipartiteCovariance& bip) {
    EntanglementMeasures m;
    m.eta_minus = eta_minus(bip);
    m.log_negativity = is_product(bip) ? 0.0 : log_negativity_from_eta(m.eta_minus);
    return m;
}

}  // namespace flexcool
