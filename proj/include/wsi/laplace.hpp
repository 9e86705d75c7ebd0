#pragma once
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "wsi/setup.hpp"

namespace wsi {

using LaplaceTransform = std::function<std::complex<double>(std::complex<double>)>;

struct EulerParams {
    double a = 18.4;  // abscissa shift, discretization error ~ exp(-a)
    int terms = 40;   // plain partial-sum terms
    int binomial = 32;
};

// Abate-Whitt Euler summation on the Bromwich integral.
double invert_euler(const LaplaceTransform& F, double t, const EulerParams& p = {});

// Fixed Talbot contour s = lambda (theta cot theta + i theta), lambda = 2M/(5t).
double invert_talbot(const LaplaceTransform& F, double t, int nodes = 64);

// Transform of the displacement for an object released from delta0 in still water, eps = 0.
std::complex<double> decay_transform(std::complex<double> s, double delta0, double tau2, double ell,
                                     double kappa);

// Displacement history by Euler inversion, checked against Talbot.
// Throws OracleError where the two differ by more than `tolerance`.
std::vector<double> linear_decay_exact(std::span<const double> t, double delta0,
                                       const PhysicalSetup& setup, double tolerance = 1e-4);

}  // namespace wsi
