#pragma once
#include <span>

namespace wsi {

// Momentum flux eps q^2/h + (h^2 - 1)/(2 eps), h = 1 + eps zeta; zeta when eps = 0.
double shallow_flux(double zeta, double q, double epsilon);

// Shape exp(-|x|/kappa) of the momentum source near a boundary.
double source_shape(double x_offset, double kappa);

struct GenerationSource {
    double s = 0.0;       // at the current level
    double s_star = 0.0;  // predictor level (second order only)
};

// Source coefficients from a sampled boundary discharge. g[i] holds
// g((first_step + i) dt); step n needs samples n..n+1 (order 1) or n-1..n+2 (order 2).
GenerationSource generation_source(std::span<const double> g, long n, int order, double dt,
                                   long first_step = 0);

}  // namespace wsi
