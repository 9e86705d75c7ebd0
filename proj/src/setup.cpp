#include "wsi/setup.hpp"

#include <cmath>
#include <string>

#include "wsi/errors.hpp"
#include "wsi/quadrature.hpp"

namespace wsi {

DepthProfile DepthProfile::constant(double h0) {
    DepthProfile p;
    p.constant_ = h0;
    return p;
}

DepthProfile DepthProfile::from_function(std::function<double(double)> h) {
    if (!h) throw ConfigError("depth profile: empty function");
    DepthProfile p;
    p.fn_ = std::move(h);
    return p;
}

double DepthProfile::operator()(double x) const { return constant_ ? *constant_ : fn_(x); }

double DepthProfile::constant_value() const {
    if (!constant_) throw std::logic_error("depth profile is not constant");
    return *constant_;
}

PhysicalSetup PhysicalSetup::make(double epsilon, double kappa, double ell, DepthProfile h_eq) {
    if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be >= 0");
    if (!(kappa > 0.0)) throw ConfigError("kappa must be > 0 (the trace equations need dispersion)");
    if (!(ell > 0.0)) throw ConfigError("ell must be > 0");

    PhysicalSetup s;
    s.epsilon = epsilon;
    s.kappa = kappa;
    s.ell = ell;
    if (h_eq.is_constant()) {
        const double h0 = h_eq.constant_value();
        if (!(h0 > 0.0)) throw ConfigError("h_eq must be strictly positive");
        s.mass = 1.0 - h0;
    } else {
        const int n = kQuadraturePoints;
        for (int i = 0; i < n; ++i) {
            const double x = -ell + 2.0 * ell * i / (n - 1);
            const double h = h_eq(x);
            if (!(h > 0.0)) throw ConfigError("h_eq must be strictly positive on [-ell, ell]");
            if (std::abs(h - h_eq(-x)) > 1e-12 * std::max(1.0, std::abs(h)))
                throw ConfigError("h_eq must be even");
        }
        s.mass = simpson([&](double x) { return 1.0 - h_eq(x); }, -ell, ell) / (2.0 * ell);
    }
    s.h_eq = std::move(h_eq);
    return s;
}

PhysicalSetup PhysicalSetup::from_mu(double epsilon, double mu, double ell, DepthProfile h_eq) {
    if (!(mu > 0.0)) throw ConfigError("mu must be > 0");
    return make(epsilon, std::sqrt(mu / 3.0), ell, std::move(h_eq));
}

PhysicalSetup PhysicalSetup::without_object(double epsilon, double kappa) {
    if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be >= 0");
    if (!(kappa > 0.0)) throw ConfigError("kappa must be > 0 (the trace equations need dispersion)");
    PhysicalSetup s;
    s.epsilon = epsilon;
    s.kappa = kappa;
    return s;
}

}  // namespace wsi
