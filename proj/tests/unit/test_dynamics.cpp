#include <doctest.h>

#include "flexcool/dynamics.hpp"
#include "flexcool/errors.hpp"
#include "test_support.hpp"

using namespace flexcool;

TEST_CASE("single-mode drift pattern") {
    const auto c = oracle::figure_config({{2e6, 2.0, -6.5e3}}, 12e6, 0.01, 1.0);
    const auto eff = derive_effective(c);
    const auto sys = build_system(c, eff);
    const double k = 2.0 * eff.alpha_abs * -6.5e3;
    const double gamma = eff.gamma_eff;
    const double theta = 2e6;

    Eigen::Matrix4d expected;
    // columns: dq, dp, dX, dY
    expected << 0, -2e6, 0, 0,
                2e6, -2.0, -k, 0,
                0, 0, -gamma, theta,
                k, 0, -theta, -gamma;  // (4,1) carries +2|alpha|g
    CHECK(sys.drift.rows() == 4);
    CHECK((sys.drift - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dimensions and decoupling") {
    auto c = oracle::figure_config({{2e6, 2, 0}, {1.99e6, 2, 0}, {2.01e6, 2, 0}}, 17.5e6, 0.01, 1.0);
    const auto sys = build_system(c);
    CHECK(sys.dim() == 8);
    CHECK(sys.drift.rows() == 8);
    // g = 0: only the diagonal 2x2 blocks survive
    for (int r = 0; r < 8; ++r)
        for (int col = 0; col < 8; ++col)
            if (r / 2 != col / 2) CHECK(sys.drift(r, col) == 0.0);
}

TEST_CASE("drift invariants") {
    const auto c = oracle::figure_config({{2e6, 3.0, 40e3}, {1.98e6, 5.0, 41e3}}, 12e6, 0.01, 0.995);
    const auto eff = derive_effective(c);
    const auto a = build_drift(c, eff);

    SUBCASE("trace is minus the total damping") {
        CHECK(a.trace() == doctest::Approx(-(3.0 + 5.0) - 2.0 * eff.gamma_eff).epsilon(1e-15));
    }
    SUBCASE("position rows carry only -nu") {
        for (int j = 0; j < 2; ++j) {
            const int q = LinearSystem::q_index(j);
            int nonzero = 0;
            for (int col = 0; col < a.cols(); ++col) nonzero += a(q, col) != 0.0;
            CHECK(nonzero == 1);
            CHECK(a(q, LinearSystem::p_index(j)) == -c.modes[j].nu);
        }
    }
    SUBCASE("coupling enters only as |alpha| g") {
        auto scaled_c = c;
        for (auto& m : scaled_c.modes) m.g *= 4.0;
        auto scaled_eff = eff;
        scaled_eff.alpha_abs /= 4.0;
        CHECK((build_drift(scaled_c, scaled_eff) - a).cwiseAbs().maxCoeff() <= 1e-12 * a.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("diffusion") {
    auto c = oracle::figure_config({{2e6, 2.0, -6.5e3}}, 12e6, 0.01, 1.0);
    const auto d = build_diffusion(c);
    const double m = oracle::bose(2e6, 0.01);
    Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
    expected(1, 1) = 2.0 * (2.0 * m + 1.0);
    CHECK((d - expected).cwiseAbs().maxCoeff() <= 1e-12 * expected(1, 1));

    SUBCASE("m = 100 gives 402") {
        CHECK(2.0 * (2.0 * 100.0 + 1.0) == 402.0);
    }
    SUBCASE("zero temperature limit is kappa") {
        c.temperature = 1e-6;
        CHECK(build_diffusion(c)(1, 1) == doctest::Approx(2.0));
    }
    SUBCASE("optional phonon vacuum noise") {
        c.phonon_vacuum_noise = true;
        const auto dv = build_diffusion(c);
        CHECK(dv(2, 2) == doctest::Approx(derive_effective(c).gamma_eff));
        CHECK(dv(3, 3) == dv(2, 2));
    }
}

TEST_CASE("swapping identical modes permutes the drift") {
    const MechanicalMode a{2e6, 2.0, -6.5e3};
    const MechanicalMode b{3e6, 4.0, -5e3};
    const auto c1 = oracle::figure_config({a, b}, 12e6, 0.01, 1.0);
    auto c2 = c1;
    std::swap(c2.modes[0], c2.modes[1]);
    const auto a1 = build_system(c1).drift;
    const auto a2 = build_system(c2).drift;
    Eigen::PermutationMatrix<Eigen::Dynamic> p(6);
    p.indices() << 2, 3, 0, 1, 4, 5;
    CHECK((p * a1 * p.transpose() - a2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("build_system validates") {
    auto c = oracle::figure_config({{2e6, 2.0, -6.5e3}}, 12e6, 0.01, 1.0);
    c.temperature = -1.0;
    CHECK_THROWS_AS(build_system(c), ConfigError);
}
