#pragma once
#include <array>
#include <functional>

#include "wsi/setup.hpp"
#include "wsi/state.hpp"

namespace wsi {

struct GeometryCoeffs {
    double alpha = 0.0;
    double alpha_prime = 0.0;
    double beta = 0.0;
    double tau2 = 0.0;
    // Mean of 1/(h_eq + eps*delta) at the two contact points, the added-mass term in tau2.
    double edge_inverse_depth = 0.0;
};

GeometryCoeffs geometry_coeffs(const PhysicalSetup& setup, double eps_delta);

using Mat4 = std::array<std::array<double, 4>, 4>;

struct CouplingMatrix {
    Mat4 m{};
    Mat4 inv{};
    double det = 0.0;  // D = -4AB + kappa^2 J^2
};

CouplingMatrix assemble_and_invert_M(const PhysicalSetup& setup, const GeometryCoeffs& coeffs,
                                     double zu_plus, double zu_minus);

// Quadratic terms (Q_i, Q_delta, Q_plus, Q_minus) of the triangularized system.
std::array<double, 4> quadratic_terms(const PhysicalSetup& setup, const GeometryCoeffs& coeffs,
                                      double qi_avg, double delta_dot, double zu_plus,
                                      double zu_minus);

std::array<double, 7> rhs_G(const Theta& theta, double r1f_plus, double r1f_minus, double f_ext,
                            const PhysicalSetup& setup);

std::array<double, 5> rhs_G_forced(const ForcedTheta& theta, double r1f_plus, double r1f_minus,
                                   const MotionSample& motion, const PhysicalSetup& setup);

std::array<double, 4> rhs_G_symmetric(const SymmetricTheta& theta, double r1f_plus, double f_ext,
                                      const PhysicalSetup& setup);

struct SourcePair {
    double plus = 0.0;
    double minus = 0.0;
};

SourcePair source_coeffs(const Theta& theta, double r1f_plus, double r1f_minus, double f_ext,
                         const PhysicalSetup& setup);

// External force that keeps the object on the prescribed trajectory.
double control_force(const ForcedTheta& theta, double r1f_plus, double r1f_minus,
                     const MotionSample& motion, const PhysicalSetup& setup);

}  // namespace wsi
