#pragma once
#include <functional>
#include <optional>

namespace wsi {

// Equilibrium depth under the object, h_eq(x) on [-ell, ell].
class DepthProfile {
public:
    static DepthProfile constant(double h0);
    static DepthProfile from_function(std::function<double(double)> h);

    double operator()(double x) const;
    bool is_constant() const { return constant_.has_value(); }
    double constant_value() const;

private:
    std::optional<double> constant_;
    std::function<double(double)> fn_;
};

struct PhysicalSetup {
    double epsilon = 0.0;
    double kappa = 0.0;
    double ell = 0.0;
    DepthProfile h_eq = DepthProfile::constant(1.0);
    double mass = 0.0;

    // Validates and derives the mass from Archimedes' principle.
    static PhysicalSetup make(double epsilon, double kappa, double ell, DepthProfile h_eq);
    static PhysicalSetup from_mu(double epsilon, double mu, double ell, DepthProfile h_eq);
    // Fluid only, for runs driven entirely by boundary data (ell = 0, no mass).
    static PhysicalSetup without_object(double epsilon, double kappa);

    double mu() const { return 3.0 * kappa * kappa; }
};

// Quadrature points used whenever h_eq is not constant.
inline constexpr int kQuadraturePoints = 401;

}  // namespace wsi
