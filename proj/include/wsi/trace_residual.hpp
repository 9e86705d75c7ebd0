#pragma once
#include <vector>

namespace wsi {

// Uniformly sampled boundary quantities of one contact point: elevation, the
// mean and half-jump of the contact discharge, and the R1 f_sw trace.
struct TraceSeries {
    std::vector<double> zeta;
    std::vector<double> f;
    std::vector<double> g;
    std::vector<double> r;
};

// Residual of the second-order trace equation at interior samples 1..M-2,
// using centered differences in time. side is +1 (right contact) or -1 (left).
std::vector<double> trace_ode_residual(const TraceSeries& series, int side, double epsilon,
                                       double kappa, double dt);

}  // namespace wsi
