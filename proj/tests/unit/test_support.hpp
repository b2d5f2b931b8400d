#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls into the solver code under test.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "flexcool/params.hpp"

namespace oracle {

// V = int_0^inf e^{A t} D e^{A^T t} dt for Hurwitz A.
// Gauss-Legendre on a short window [0, h], then window doubling
//   V(2T) = V(T) + M(T) V(T) M(T)^T,   M(2T) = M(T)^2,
// until the propagator has decayed below round-off.
inline Eigen::MatrixXd lyapunov_integral(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d) {
    static constexpr std::array<double, 8> x = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                                0.7966664774136267,  0.9602898564975363};
    static constexpr std::array<double, 8> w = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                                0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                                0.2223810344533745, 0.1012285362903763};
    const double h = 0.25 / a.cwiseAbs().rowwise().sum().maxCoeff();
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(a.rows(), a.cols());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double t = 0.5 * h * (x[k] + 1.0);
        const Eigen::MatrixXd m = (a * t).exp();
        v += 0.5 * h * w[k] * m * d * m.transpose();
    }
    Eigen::MatrixXd m = (a * h).exp();
    for (int it = 0; it < 200 && m.norm() > 1e-20; ++it) {
        v += m * v * m.transpose();
        m = m * m;
    }
    return v;
}

// Random Hurwitz drift: a Gaussian matrix shifted left of the imaginary axis.
inline Eigen::MatrixXd random_hurwitz(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> margin(0.05, 1.0);
    Eigen::MatrixXd a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = gauss(rng);
    const Eigen::VectorXcd ev = a.eigenvalues();
    double max_re = ev.real().maxCoeff();
    a -= (max_re + margin(rng)) * Eigen::MatrixXd::Identity(n, n);
    return a;
}

// Random positive semidefinite diffusion of rank >= 1.
inline Eigen::MatrixXd random_psd(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> rank_dist(1, n);
    const int rank = rank_dist(rng);
    Eigen::MatrixXd b(n, rank);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < rank; ++c) b(r, c) = gauss(rng);
    return b * b.transpose();
}

// Two-mode squeezed vacuum, vacuum variance 1/2:
// (1/2) [[cosh 2r I, sinh 2r Z], [sinh 2r Z, cosh 2r I]], Z = diag(1, -1).
inline Eigen::Matrix4d two_mode_squeezed(double r) {
    const double c = 0.5 * std::cosh(2.0 * r);
    const double s = 0.5 * std::sinh(2.0 * r);
    Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
    v.diagonal().setConstant(c);
    v(0, 2) = v(2, 0) = s;
    v(1, 3) = v(3, 1) = -s;
    return v;
}

// Bose-Einstein occupation written out independently of the library.
inline double bose(double nu_hz, double temperature) {
    const double hbar = 1.054571817e-34;
    const double kb = 1.380649e-23;
    const double x = hbar * 2.0 * 3.14159265358979323846 * nu_hz / (kb * temperature);
    return 1.0 / std::expm1(x);
}

// Effective drive and damping from the adiabatic-elimination formulas.
inline double xi(const flexcool::AtomicParams& a) {
    return a.lamb_dicke * a.rabi * a.rabi * a.detuning / (4.0 * a.detuning * a.detuning + a.gamma_sp * a.gamma_sp);
}
inline double gamma_eff(const flexcool::AtomicParams& a) {
    const double num = a.gamma_sp * a.lamb_dicke * a.lamb_dicke * a.rabi * a.rabi;
    return num / (2.0 * (a.gamma_sp * a.gamma_sp + 4.0 * a.detuning * a.detuning));
}

// The atomic parameters used for every figure, with a chosen Rabi frequency.
inline flexcool::AtomicParams figure_atoms(double rabi) {
    flexcool::AtomicParams a;
    a.gamma_sp = 6.1e6;
    a.rabi = rabi;
    a.detuning = 45.0e6;
    a.lamb_dicke = 0.15;
    a.omega_ph = 477.0;
    return a;
}

// Figure atoms driving the given modes at theta = ratio * modes[ref].nu.
inline flexcool::SystemConfig figure_config(std::vector<flexcool::MechanicalMode> modes, double rabi,
                                            double temperature, double ratio, int ref = 0) {
    flexcool::SystemConfig c;
    c.atoms = figure_atoms(rabi);
    c.modes = std::move(modes);
    c.temperature = temperature;
    c.theta = ratio * c.modes.at(ref).nu;
    return c;
}

// One mechanical mode with log-uniform parameters around the figure regime,
// both detuning signs and both signs of theta and g.
inline flexcool::SystemConfig random_single_mode(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, u(rng)); };
    auto sign = [&] { return u(rng) < 0.5 ? -1.0 : 1.0; };
    flexcool::SystemConfig c;
    c.atoms.gamma_sp = log_uniform(1e6, 1e8);
    c.atoms.rabi = log_uniform(1e6, 5e7);
    c.atoms.detuning = sign() * log_uniform(1e6, 1e8);
    c.atoms.lamb_dicke = log_uniform(0.05, 0.5);
    c.atoms.omega_ph = 477.0;
    const double nu = log_uniform(1e5, 1e7);
    c.modes = {{nu, nu * log_uniform(1e-6, 1e-2), sign() * log_uniform(1e2, 1e6)}};
    c.temperature = log_uniform(1e-3, 10.0);
    c.theta = sign() * nu * log_uniform(0.1, 3.0);
    return c;
}

}  // namespace oracle
