#include "wsi/laplace.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wsi/coupling.hpp"
#include "wsi/errors.hpp"

namespace wsi {

double invert_euler(const LaplaceTransform& F, double t, const EulerParams& p) {
    if (!(t > 0.0)) throw std::invalid_argument("invert_euler: t must be > 0");
    const double pi = std::numbers::pi;
    const double scale = std::exp(0.5 * p.a) / t;
    double partial = 0.5 * scale * F({p.a / (2.0 * t), 0.0}).real();
    std::vector<double> tail;
    tail.reserve(p.binomial + 1);
    for (int k = 1; k <= p.terms + p.binomial; ++k) {
        const std::complex<double> s(p.a / (2.0 * t), k * pi / t);
        partial += (k % 2 ? -1.0 : 1.0) * scale * F(s).real();
        if (k >= p.terms) tail.push_back(partial);
    }
    // binomial average of the last partial sums
    double sum = 0.0, coef = std::pow(0.5, p.binomial);
    for (int j = 0; j <= p.binomial; ++j) {
        sum += coef * tail[j];
        coef *= static_cast<double>(p.binomial - j) / (j + 1);
    }
    return sum;
}

double invert_talbot(const LaplaceTransform& F, double t, int nodes) {
    if (!(t > 0.0)) throw std::invalid_argument("invert_talbot: t must be > 0");
    const double pi = std::numbers::pi;
    const double lambda = 2.0 * nodes / (5.0 * t);
    std::complex<double> acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double th = -pi + (j + 0.5) * 2.0 * pi / nodes;
        const double cot = std::cos(th) / std::sin(th);
        const std::complex<double> s = lambda * std::complex<double>(th * cot, th);
        const std::complex<double> ds =
            lambda * std::complex<double>(cot - th / (std::sin(th) * std::sin(th)), 1.0);
        acc += std::exp(s * t) * F(s) * ds;
    }
    return (acc / static_cast<double>(nodes) / std::complex<double>(0.0, 1.0)).real();
}

std::complex<double> decay_transform(std::complex<double> s, double delta0, double tau2, double ell,
                                     double kappa) {
    // kappa sqrt(s - i/kappa) sqrt(s + i/kappa): the principal root of 1 + kappa^2 s^2 on Re s > 0,
    // with both cuts running left from +-i/kappa.
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> root = kappa * std::sqrt(s - i / kappa) * std::sqrt(s + i / kappa);
    return (tau2 * s + ell * root) / (tau2 * s * s + s * ell * root + 1.0) * delta0;
}

std::vector<double> linear_decay_exact(std::span<const double> t, double delta0,
                                       const PhysicalSetup& setup, double tolerance) {
    if (setup.epsilon != 0.0) throw ConfigError("linear decay reference requires epsilon = 0");
    const double tau2 = geometry_coeffs(setup, 0.0).tau2;
    const LaplaceTransform F = [&](std::complex<double> s) {
        return decay_transform(s, delta0, tau2, setup.ell, setup.kappa);
    };
    std::vector<double> out(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] < 0.0) throw std::invalid_argument("linear_decay_exact: negative time");
        if (t[j] == 0.0 || delta0 == 0.0) {
            out[j] = t[j] == 0.0 ? delta0 : 0.0;
            continue;
        }
        const double e = invert_euler(F, t[j]);
        const double b = invert_talbot(F, t[j]);
        if (!(std::abs(e - b) <= tolerance))
            throw OracleError("Laplace inversions disagree at t = " + std::to_string(t[j]) + ": " +
                              std::to_string(e) + " vs " + std::to_string(b));
        out[j] = e;
    }
    return out;
}

}  // namespace wsi
