#include "wsi/soliton.hpp"

#include <array>
#include <cmath>

#include "wsi/errors.hpp"

namespace wsi {

namespace {

// (u - log(1+u))/u^2 without cancellation for small u.
double log_remainder(double u) {
    if (std::abs(u) < 1e-2) {
        double sum = 0.0, p = 1.0;
        for (int j = 2; j < 14; ++j) {
            sum += ((j % 2 == 0) ? 1.0 : -1.0) * p / j;
            p *= u;
        }
        return sum;
    }
    return (u - std::log1p(u)) / (u * u);
}

}  // namespace

double soliton_speed_squared(double zeta_max, double epsilon) {
    if (!(zeta_max > 0.0)) throw ConfigError("soliton: zeta_max must be > 0");
    if (!(epsilon > 0.0)) throw ConfigError("soliton: epsilon must be > 0");
    const double u = epsilon * zeta_max;
    // c^2 = (eps/6)(3 zm^2 + eps zm^3)/(zm - log(1 + eps zm)/eps)
    return (0.5 + u / 6.0) / log_remainder(u);
}

SolitonProfile SolitonProfile::compute(double zeta_max, double epsilon, double kappa, double step) {
    if (!(kappa > 0.0)) throw ConfigError("soliton: kappa must be > 0");
    if (!(step > 0.0) || step > 1e-3) throw ConfigError("soliton: step must lie in (0, 1e-3]");
    const double c2 = soliton_speed_squared(zeta_max, epsilon);
    if (!(c2 > 1.0)) throw ConfigError("soliton: subcritical speed");

    SolitonProfile p;
    p.zeta_max_ = zeta_max;
    p.epsilon_ = epsilon;
    p.kappa_ = kappa;
    p.speed_ = std::sqrt(c2);
    p.step_ = step;
    const double ck2 = c2 * kappa * kappa;

    // Near the crest: second-order form, (zeta, zeta').
    auto accel = [&](double z) { return (c2 * z / (1.0 + epsilon * z) - z - 0.5 * epsilon * z * z) / ck2; };
    // Away from it: first integral, zeta' = -zeta sqrt(2 Phi(zeta)/(c^2 kappa^2)).
    auto slope = [&](double z) {
        const double phi = c2 * log_remainder(epsilon * z) - 0.5 - epsilon * z / 6.0;
        if (!(phi > 0.0)) throw OracleError("soliton: integration left the decaying branch");
        return -z * std::sqrt(2.0 * phi / ck2);
    };

    double z = zeta_max, s = 0.0;
    p.zeta_.push_back(z);
    p.slope_.push_back(s);
    const double h = step;
    while (z > 0.5 * zeta_max) {
        const std::array<double, 2> k1 = {s, accel(z)};
        const std::array<double, 2> k2 = {s + 0.5 * h * k1[1], accel(z + 0.5 * h * k1[0])};
        const std::array<double, 2> k3 = {s + 0.5 * h * k2[1], accel(z + 0.5 * h * k2[0])};
        const std::array<double, 2> k4 = {s + h * k3[1], accel(z + h * k3[0])};
        z += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        s += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        if (!(s < 0.0) || z > zeta_max)
            throw OracleError("soliton: profile does not decay from the crest");
        p.zeta_.push_back(z);
        p.slope_.push_back(s);
    }
    p.slope_.back() = slope(z);
    while (z > 1e-12) {
        const double k1 = slope(z);
        const double k2 = slope(z + 0.5 * h * k1);
        const double k3 = slope(z + 0.5 * h * k2);
        const double k4 = slope(z + h * k3);
        z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(z > 0.0)) break;
        p.zeta_.push_back(z);
        p.slope_.push_back(slope(z));
        if (p.zeta_.size() > 100000000) throw OracleError("soliton: tail does not decay");
    }
    return p;
}

double SolitonProfile::operator()(double x) const {
    const double a = std::abs(x);
    const double pos = a / step_;
    const std::size_t i = static_cast<std::size_t>(pos);
    if (i + 1 >= zeta_.size()) return 0.0;
    const double u = pos - static_cast<double>(i);
    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u * u * (3.0 - 2.0 * u);
    const double h11 = u * u * (u - 1.0);
    return h00 * zeta_[i] + h10 * step_ * slope_[i] + h01 * zeta_[i + 1] + h11 * step_ * slope_[i + 1];
}

double SolitonProfile::derivative(double x) const {
    const double a = std::abs(x);
    const double pos = a / step_;
    const std::size_t i = static_cast<std::size_t>(pos);
    if (i + 1 >= zeta_.size()) return 0.0;
    const double u = pos - static_cast<double>(i);
    const double d00 = 6.0 * u * (u - 1.0);
    const double d10 = (1.0 - u) * (1.0 - 3.0 * u);
    const double d01 = -d00;
    const double d11 = u * (3.0 * u - 2.0);
    const double d = (d00 * zeta_[i] + d01 * zeta_[i + 1]) / step_ + d10 * slope_[i] + d11 * slope_[i + 1];
    return x < 0.0 ? -d : d;
}

std::vector<std::pair<double, double>> SolitonProfile::samples(double x_range, double dx_sample) const {
    if (!(dx_sample > 0.0) || !(x_range > 0.0)) throw ConfigError("soliton samples: bad range");
    const long n = static_cast<long>(std::floor(x_range / dx_sample + 1e-9));
    std::vector<std::pair<double, double>> out;
    out.reserve(2 * n + 1);
    for (long j = -n; j <= n; ++j) {
        const double x = j * dx_sample;
        out.emplace_back(x, (*this)(x));
    }
    return out;
}

SolitonProfile soliton_profile(double zeta_max, double epsilon, double kappa, double step) {
    return SolitonProfile::compute(zeta_max, epsilon, kappa, step);
}

}  // namespace wsi
