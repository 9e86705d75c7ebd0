#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "wsi/errors.hpp"
#include "wsi/laplace.hpp"
#include "wsi/periodic.hpp"
#include "wsi/setup.hpp"
#include "wsi/soliton.hpp"
#include "wsi/trace_residual.hpp"

using namespace wsi;

TEST_CASE("solitary wave speed") {
    CHECK(soliton_speed_squared(1.0, 0.3) == doctest::Approx(0.165 / (1.0 - std::log(1.3) / 0.3)).epsilon(1e-15));
    CHECK(soliton_speed_squared(1.0, 0.3) == doctest::Approx(1.3152393410045873).epsilon(1e-14));
    CHECK(soliton_speed_squared(0.2, 0.3) == doctest::Approx(1.0606022854296541).epsilon(1e-14));
    const auto p = soliton_profile(1.0, 0.3, std::sqrt(0.1));
    CHECK(p.speed() == doctest::Approx(1.1468388470071056).epsilon(1e-14));
    CHECK(std::abs(p.speed() - 1.146840) < 2e-6);
    CHECK_THROWS_AS(soliton_profile(0.0, 0.3, 0.3), ConfigError);
    CHECK_THROWS_AS(soliton_profile(1.0, 0.0, 0.3), ConfigError);
}

TEST_CASE("solitary wave profile shape and ODE residual") {
    const double eps = 0.3, kappa = std::sqrt(0.1);
    const auto p = soliton_profile(1.0, eps, kappa);
    CHECK(p(0.0) == 1.0);
    for (double x : {0.1, 0.77, 2.0, 5.5}) CHECK(p(x) == p(-x));
    const auto& z = p.node_values();
    const auto& s = p.node_slopes();
    for (std::size_t j = 1; j < z.size(); ++j) CHECK(z[j] <= z[j - 1]);
    CHECK(p(60.0) == 0.0);

    // fourth-order difference of the stored slopes for zeta''
    const double h = p.step(), c2 = p.speed_squared();
    double worst = 0.0;
    for (std::size_t j = 2; j + 2 < z.size() && z[j] > 1e-10; ++j) {
        const double zpp = (-s[j + 2] + 8.0 * s[j + 1] - 8.0 * s[j - 1] + s[j - 2]) / (12.0 * h);
        const double res = c2 * kappa * kappa * zpp - c2 * z[j] / (1.0 + eps * z[j]) +
                           (eps * eps * z[j] * z[j] + 2.0 * eps * z[j]) / (2.0 * eps);
        worst = std::max(worst, std::abs(res));
    }
    CHECK(worst <= 1e-8);

    const auto samp = p.samples(10.0, 0.25);
    CHECK(samp.front().first == doctest::Approx(-10.0));
    CHECK(samp.back().first == doctest::Approx(10.0));
    CHECK(samp.size() == 81);
}

TEST_CASE("inverse Laplace transform on known pairs") {
    const LaplaceTransform damped = [](std::complex<double> s) { return 1.0 / ((s + 0.5) * (s + 0.5) + 1.0); };
    for (double t : {0.5, 3.0, 10.0}) {
        const double exact = std::exp(-0.5 * t) * std::sin(t);
        CHECK(std::abs(invert_euler(damped, t) - exact) < 1e-8);
        CHECK(std::abs(invert_talbot(damped, t) - exact) < 1e-5);
    }
    CHECK_THROWS(invert_euler(damped, 0.0));
    CHECK_THROWS(invert_talbot(damped, -1.0));
}

TEST_CASE("linear decay reference values") {
    const std::vector<double> t{0.0, 0.5, 3.0, 7.5, 15.0};
    SUBCASE("kappa^2 = 0.1") {
        const auto s = PhysicalSetup::make(0.0, std::sqrt(0.1), 4.0, DepthProfile::constant(0.7));
        const auto d = linear_decay_exact(t, 0.1, s);
        CHECK(d[0] == 0.1);
        CHECK(d[1] == doctest::Approx(0.098651302287754882).epsilon(1e-9));
        CHECK(d[2] == doctest::Approx(0.066533671282176088).epsilon(1e-9));
        CHECK(d[3] == doctest::Approx(0.0097998532340460314).epsilon(1e-9));
        CHECK(d[4] == doctest::Approx(-0.0030255552618301588).epsilon(1e-9));
    }
    SUBCASE("kappa^2 = 1/30") {
        const auto s = PhysicalSetup::make(0.0, std::sqrt(1.0 / 30.0), 4.0, DepthProfile::constant(0.7));
        const auto d = linear_decay_exact(t, 0.1, s);
        CHECK(d[1] == doctest::Approx(0.098557668787742957).epsilon(1e-9));
        CHECK(d[2] == doctest::Approx(0.066104212038190613).epsilon(1e-9));
        CHECK(d[3] == doctest::Approx(0.0098413643740093442).epsilon(1e-9));
        CHECK(d[4] == doctest::Approx(-0.0028530136122779702).epsilon(1e-9));
    }
    SUBCASE("zero release and bad setups") {
        const auto s = PhysicalSetup::make(0.0, std::sqrt(0.1), 4.0, DepthProfile::constant(0.7));
        for (double v : linear_decay_exact(t, 0.0, s)) CHECK(v == 0.0);
        const auto nl = PhysicalSetup::make(0.3, std::sqrt(0.1), 4.0, DepthProfile::constant(0.7));
        CHECK_THROWS_AS(linear_decay_exact(t, 0.1, nl), ConfigError);
        // a zero tolerance can never be met by two different inversions
        CHECK_THROWS_AS(linear_decay_exact(std::vector<double>{3.0}, 0.1, s, 0.0), OracleError);
    }
    SUBCASE("initial value theorem") {
        const auto s = PhysicalSetup::make(0.0, std::sqrt(0.1), 4.0, DepthProfile::constant(0.7));
        const std::complex<double> big(1e8, 0.0);
        const double tau2 = 0.09 + (16.0 / 3.0) / 0.7 + 0.1 / 0.7;
        CHECK(std::abs(big * decay_transform(big, 0.1, tau2, 4.0, s.kappa) - 0.1) < 1e-6);
    }
}

TEST_CASE("periodic fixed-object solution") {
    const auto s = PhysicalSetup::make(0.0, std::sqrt(0.1), 1.0, DepthProfile::constant(0.8));
    const auto spec = PeriodicSolutionSpec::make(2.0, 0.1, 0.05, 0.08, -0.02, s);
    CHECK(spec.omega == doctest::Approx(std::sqrt(4.0 / 1.4)).epsilon(1e-15));
    CHECK(spec.omega == doctest::Approx(1.690309).epsilon(1e-6));
    CHECK_NOTHROW(spec.validate(s));

    auto broken = spec;
    broken.q_c *= 1.0 + 1e-10;
    CHECK_THROWS_AS(broken.validate(s), ConfigError);
    broken = spec;
    broken.omega *= 1.01;
    CHECK_THROWS_AS(broken.validate(s), ConfigError);
    const auto nl = PhysicalSetup::make(0.3, std::sqrt(0.1), 1.0, DepthProfile::constant(0.8));
    CHECK_THROWS_AS(spec.validate(nl), ConfigError);

    const auto zero = PeriodicSolutionSpec::make(2.0, 0.0, 0.0, 0.0, 0.0, s);
    const auto z = fixed_object_exact(zero, s, 0.7, 2.5);
    CHECK(z.zeta == 0.0);
    CHECK(z.q == 0.0);
    CHECK(z.qi_avg == 0.0);

    // linear equations outside, continuity of q and the interior ODE at the contacts
    const double k2 = s.kappa * s.kappa, ell = s.ell, alpha = 1.0 / 0.8;
    for (double t : {0.0, 0.3, 1.0, 4.2}) {
        for (double x : {1.0, 1.7, 6.0, -1.0, -3.3}) {
            const auto p = fixed_object_exact(spec, s, t, x);
            CHECK(std::abs(p.zeta_t + p.q_x) < 1e-12);
            CHECK(std::abs(p.q_t - k2 * p.q_txx + p.zeta_x) < 1e-12);
        }
        const auto right = fixed_object_exact(spec, s, t, ell);
        const auto left = fixed_object_exact(spec, s, t, -ell);
        CHECK(std::abs(right.q - right.qi_avg) < 1e-14);
        CHECK(std::abs(left.q - left.qi_avg) < 1e-14);
        const double ode = alpha * right.qi_avg_t + (right.zeta - left.zeta) / (2.0 * ell) +
                           k2 / (2.0 * ell) * (right.zeta_tt - left.zeta_tt);
        CHECK(std::abs(ode) < 1e-12);
    }
    CHECK_THROWS(fixed_object_exact(spec, s, 0.0, 0.5));
}

TEST_CASE("trace equation residual") {
    const double eps = 0.3, kappa = 0.3, dt = 0.01;
    TraceSeries zero{std::vector<double>(10, 0.0), std::vector<double>(10, 0.0), std::vector<double>(10, 0.0),
                     std::vector<double>(10, 0.0)};
    for (double r : trace_ode_residual(zero, 1, eps, kappa, dt)) CHECK(r == 0.0);

    const double z = 0.04;
    TraceSeries balanced{std::vector<double>(10, z), std::vector<double>(10, 0.0), std::vector<double>(10, 0.0),
                         std::vector<double>(10, z + 0.5 * eps * z * z)};
    for (int side : {1, -1})
        for (double r : trace_ode_residual(balanced, side, eps, kappa, dt)) CHECK(std::abs(r) < 1e-14);

    TraceSeries shortened{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    CHECK_THROWS(trace_ode_residual(shortened, 1, eps, kappa, dt));
    CHECK_THROWS(trace_ode_residual(zero, 0, eps, kappa, dt));
}
