#pragma once
#include "wsi/setup.hpp"

namespace wsi {

// Time-periodic linear solution around a fixed object.
struct PeriodicSolutionSpec {
    double k = 0.0;
    double omega = 0.0;
    double zeta_c_plus = 0.0;
    double zeta_c_minus = 0.0;
    double zeta_s = 0.0;
    double q_s_plus = 0.0;
    double q_s_minus = 0.0;
    double q_c = 0.0;

    // Derives omega (> 0), q_c and zeta_s from the free amplitudes.
    static PeriodicSolutionSpec make(double k, double zeta_c_plus, double zeta_c_minus,
                                     double q_s_plus, double q_s_minus, const PhysicalSetup& setup);
    // Throws ConfigError unless the dispersion relation and both constraints hold.
    void validate(const PhysicalSetup& setup) const;
};

struct PeriodicSample {
    double zeta = 0.0;
    double q = 0.0;
    double qi_avg = 0.0;
    // analytic derivatives, for residual checks
    double zeta_t = 0.0;
    double zeta_x = 0.0;
    double zeta_tt = 0.0;
    double q_t = 0.0;
    double q_x = 0.0;
    double q_txx = 0.0;
    double qi_avg_t = 0.0;
};

// Fields at a point x of either exterior component (|x| >= ell).
PeriodicSample fixed_object_exact(const PeriodicSolutionSpec& spec, const PhysicalSetup& setup,
                                  double t, double x);

}  // namespace wsi
