#include <doctest.h>

#include <cmath>

#include "flexcool/dynamics.hpp"
#include "flexcool/entanglement.hpp"
#include "flexcool/errors.hpp"
#include "flexcool/steadystate.hpp"
#include "test_support.hpp"

using namespace flexcool;

namespace {

BipartiteCovariance from(const Eigen::Matrix4d& v) { return BipartiteCovariance::from_matrix(v); }

Eigen::Matrix2d rotation(double phi) {
    Eigen::Matrix2d r;
    r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return r;
}

}  // namespace

TEST_CASE("vacuum sits on the separability boundary") {
    const auto bip = from(Eigen::Matrix4d::Identity() * 0.5);
    CHECK(eta_minus(bip) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(log_negativity(bip) == 0.0);
}

TEST_CASE("two-mode squeezed vacuum") {
    for (double r : {0.1, 0.5, 1.0, 2.5}) {
        const auto bip = from(oracle::two_mode_squeezed(r));
        CHECK(eta_minus(bip) == doctest::Approx(0.5 * std::exp(-2.0 * r)).epsilon(1e-9));
        CHECK(std::abs(log_negativity(bip) - 2.0 * r) < 1e-9);
    }
}

TEST_CASE("product thermal states are separable") {
    for (double na : {0.0, 0.3, 10.0, 1e4}) {
        for (double nb : {0.0, 2.0, 1e3}) {
            BipartiteCovariance bip;
            bip.a_block = Eigen::Matrix2d::Identity() * (na + 0.5);
            bip.b_block = Eigen::Matrix2d::Identity() * (nb + 0.5);
            CHECK(eta_minus(bip) >= 0.5 - 1e-12);
            CHECK(log_negativity(bip) == 0.0);
        }
    }
}

TEST_CASE("party swap and local rotations") {
    const Eigen::Matrix4d v = oracle::two_mode_squeezed(0.7) + 0.2 * Eigen::Matrix4d::Identity();
    const auto bip = from(v);
    const double eta = eta_minus(bip);
    CHECK(eta_minus(bip.swapped()) == doctest::Approx(eta).epsilon(1e-12));
    CHECK(log_negativity(bip.swapped()) == doctest::Approx(log_negativity(bip)).epsilon(1e-12));

    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    s.block<2, 2>(0, 0) = rotation(0.4);
    s.block<2, 2>(2, 2) = rotation(-1.3);
    CHECK(std::abs(eta_minus(from(s * v * s.transpose())) - eta) < 1e-9);
}

TEST_CASE("non-physical input is rejected") {
    BipartiteCovariance bip;
    bip.a_block = Eigen::Matrix2d::Identity() * 0.5;
    bip.b_block = Eigen::Matrix2d::Identity() * 0.5;
    bip.c_block = Eigen::Matrix2d::Identity() * 0.6;
    CHECK_THROWS_AS(eta_minus(bip), NonPhysical);
}

TEST_CASE("log negativity threshold") {
    CHECK(log_negativity_from_eta(0.5) == 0.0);
    CHECK(log_negativity_from_eta(0.5 - 1e-13) == 0.0);
    CHECK(log_negativity_from_eta(0.25) == doctest::Approx(std::log(2.0)));
    CHECK(std::isinf(log_negativity_from_eta(0.0)));
}

TEST_CASE("reductions of a coupled covariance") {
    const auto c = oracle::figure_config({{2e6, 2.0, -6.5e3}, {3e6, 2.0, -6.5e3}}, 12e6, 0.01, 1.0);
    const auto cov = solve_lyapunov(build_system(c));
    const auto& v = cov.matrix();

    const auto mm = reduce_mech_mech(cov, 0, 1);
    CHECK(mm.a_block == v.block<2, 2>(0, 0));
    CHECK(mm.b_block == v.block<2, 2>(2, 2));
    CHECK(mm.c_block == v.block<2, 2>(0, 2));
    const auto mp = reduce_mech_phonon(cov, 1);
    CHECK(mp.b_block == v.block<2, 2>(4, 4));
    CHECK(mp.c_block == v.block<2, 2>(2, 4));

    CHECK_THROWS_AS(reduce_mech_mech(cov, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce_mech_mech(cov, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(reduce_mech_phonon(cov, 2), std::out_of_range);
}

TEST_CASE("single mode: the bipartite matrix is the whole covariance") {
    const auto c = oracle::figure_config({{2e6, 2.0, -5e3}}, 12e6, 0.01, 1.0);
    const auto cov = solve_lyapunov(build_system(c));
    CHECK(reduce_mech_phonon(cov, 0).assembled() == Eigen::Matrix4d(cov.matrix()));
    CHECK(log_negativity(reduce_mech_phonon(cov, 0)) > 1.0);
}

TEST_CASE("uncoupled modes carry no correlations") {
    const auto c = oracle::figure_config({{2e6, 2.0, 0.0}, {3e6, 2.0, 0.0}}, 12e6, 0.01, 1.0);
    const auto cov = solve_lyapunov(build_system(c));
    CHECK(reduce_mech_mech(cov, 0, 1).c_block.norm() <= 1e-12 * cov.matrix().norm());
    CHECK(reduce_mech_phonon(cov, 0).c_block.norm() <= 1e-12 * cov.matrix().norm());
    CHECK(log_negativity(reduce_mech_mech(cov, 0, 1)) == 0.0);
    CHECK(log_negativity(reduce_mech_phonon(cov, 0)) == 0.0);
}
