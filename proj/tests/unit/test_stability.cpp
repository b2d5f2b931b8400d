#include <doctest.h>

#include <cmath>
#include <random>

#include "flexcool/dynamics.hpp"
#include "flexcool/errors.hpp"
#include "flexcool/stability.hpp"
#include "test_support.hpp"

using namespace flexcool;

TEST_CASE("trivial spectra") {
    const auto r = spectral_stability(Eigen::MatrixXd(-Eigen::MatrixXd::Identity(4, 4)), 1e-12);
    CHECK(r.stable);
    CHECK(*r.decay_rate == doctest::Approx(1.0));
    CHECK(*r.relaxation_time * *r.decay_rate == doctest::Approx(1.0));

    // kappa = gamma = 0, g = 0: purely oscillatory, marginal
    Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
    a(0, 1) = -2e6;
    a(1, 0) = 2e6;
    a(2, 3) = 1e6;
    a(3, 2) = -1e6;
    const auto m = spectral_stability(Eigen::MatrixXd(a), 1e-9 * 2e6);
    CHECK_FALSE(m.stable);
    CHECK_FALSE(m.decay_rate.has_value());
}

TEST_CASE("decoupled decay rate is min(kappa/2, gamma)") {
    auto c = oracle::figure_config({{2e6, 2.0, 0.0}}, 12e6, 0.01, 1.0);
    const auto eff = derive_effective(c);
    const auto r = spectral_stability(build_system(c, eff));
    REQUIRE(r.stable);
    CHECK(*r.decay_rate == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*r.relaxation_time == doctest::Approx(1.0).epsilon(1e-9));

    // phonon damping slower than the mechanics
    c.atoms.rabi = 1e5;
    c.modes[0].kappa = 50.0;
    const auto eff2 = derive_effective(c);
    const auto r2 = spectral_stability(build_system(c, eff2));
    CHECK(*r2.decay_rate == doctest::Approx(std::min(25.0, eff2.gamma_eff)).epsilon(1e-9));

    // two modes
    auto c3 = oracle::figure_config({{2e6, 2.0, 0.0}, {3e6, 0.5, 0.0}}, 12e6, 0.01, 1.0);
    CHECK(*spectral_stability(build_system(c3)).decay_rate == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("Routh-Hurwitz at the figure point") {
    const auto c = oracle::figure_config({{2e6, 2.0, -6.5e3}}, 12e6, 0.01, 1.0);
    const auto eff = derive_effective(c);
    CHECK(routh_hurwitz_n1(c, eff));
    CHECK(spectral_stability(build_system(c, eff)).stable);

    auto free = c;
    free.modes[0].g = 0.0;
    const auto t = routh_hurwitz_terms(free, eff);
    CHECK(t.first == doctest::Approx(2e6 * 2e6 * (4e12 + eff.gamma_eff * eff.gamma_eff)));
    CHECK(t.second > 0.0);

    auto two = c;
    two.modes.push_back(c.modes[0]);
    CHECK_THROWS_AS(routh_hurwitz_n1(two, eff), ConfigError);
}

TEST_CASE("decay rate invariant under g -> c g, |alpha| -> |alpha| / c") {
    const auto c = oracle::figure_config({{2e6, 2.0, -6.5e3}}, 12e6, 0.01, 1.0);
    const auto eff = derive_effective(c);
    auto c2 = c;
    c2.modes[0].g *= 3.0;
    auto eff2 = eff;
    eff2.alpha_abs /= 3.0;
    const double a = *spectral_stability(build_system(c, eff)).decay_rate;
    const double b = *spectral_stability(build_system(c2, eff2)).decay_rate;
    CHECK(b == doctest::Approx(a).epsilon(1e-9));
}

TEST_CASE("Routh-Hurwitz agrees with the spectrum on random draws") {
    std::mt19937_64 rng(20240611);
    int checked = 0;
    int disagreements = 0;
    int stable = 0;
    while (checked < 300) {
        const auto c = oracle::random_single_mode(rng);
        const auto eff = derive_effective(c);
        const auto r = spectral_stability(build_system(c, eff));
        if (std::abs(r.max_real_part) <= 1e-6 * c.modes[0].nu) continue;
        ++checked;
        stable += r.stable;
        disagreements += routh_hurwitz_n1(c, eff) != r.stable;
    }
    CHECK(disagreements == 0);
    CHECK(stable > 10);
    CHECK(stable < 290);
}

TEST_CASE("bisection to the stability boundary matches the Routh-Hurwitz root") {
    // theta < 0 with growing |g|: the second inequality is the one that fails.
    auto c = oracle::figure_config({{2e6, 200.0, -1e3}}, 12e6, 0.01, -1.0);
    const auto eff = derive_effective(c);
    const auto& m = c.modes[0];
    const double gamma = eff.gamma_eff;
    const double theta = c.theta;
    const double th2 = theta * theta;
    const double tail = m.kappa * gamma + gamma * gamma + m.nu * m.nu;
    const double bracket =
        th2 * th2 + th2 * (m.kappa * m.kappa + 2 * m.kappa * gamma + 2 * gamma * gamma - 2 * m.nu * m.nu) + tail * tail;
    const double k2g = m.kappa + 2 * gamma;
    const double g_rh = std::sqrt(-2 * gamma * m.kappa * bracket /
                                  (4 * m.nu * eff.alpha_abs * eff.alpha_abs * theta * k2g * k2g));

    auto max_re = [&](double g) {
        auto ci = c;
        ci.modes[0].g = g;
        return spectral_stability(build_system(ci, eff)).max_real_part;
    };
    double lo = 0.0;
    double hi = 10.0 * g_rh;
    REQUIRE(max_re(lo) < 0.0);
    REQUIRE(max_re(hi) > 0.0);
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (max_re(mid) < 0.0 ? lo : hi) = mid;
    }
    CHECK(lo == doctest::Approx(g_rh).epsilon(1e-6));

    auto at = [&](double g) {
        auto ci = c;
        ci.modes[0].g = g;
        return std::pair{routh_hurwitz_n1(ci, eff), spectral_stability(build_system(ci, eff)).stable};
    };
    CHECK(at(0.999 * g_rh) == std::pair{true, true});
    CHECK(at(1.001 * g_rh) == std::pair{false, false});
    // on the boundary the spectrum is marginal and reported unstable
    CHECK_FALSE(at(lo).second);
    auto ci = c;
    ci.modes[0].g = lo;
    CHECK(routh_hurwitz_terms(ci, eff).first > 0.0);
}
