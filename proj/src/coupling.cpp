#include "wsi/coupling.hpp"

#include <cmath>

#include "wsi/errors.hpp"
#include "wsi/quadrature.hpp"

namespace wsi {

namespace {

// Inverse depths 1/(1 + eps*zu) at the two contact points.
struct EdgeDepths {
    double a_plus, a_minus;
    double mean() const { return 0.5 * (a_plus + a_minus); }
    double jump() const { return a_plus - a_minus; }
    double mean_sq() const { return 0.5 * (a_plus * a_plus + a_minus * a_minus); }
    double jump_sq() const { return a_plus * a_plus - a_minus * a_minus; }
};

EdgeDepths edge_depths(const PhysicalSetup& s, double zu_plus, double zu_minus) {
    const double hp = 1.0 + s.epsilon * zu_plus;
    const double hm = 1.0 + s.epsilon * zu_minus;
    if (!(hp > 0.0) || !(hm > 0.0))
        throw PhysicalStateError("non-positive water depth at a contact point");
    return {1.0 / hp, 1.0 / hm};
}

}  // namespace

GeometryCoeffs geometry_coeffs(const PhysicalSetup& s, double eps_delta) {
    const double l = s.ell, k2 = s.kappa * s.kappa;
    GeometryCoeffs c;
    if (s.h_eq.is_constant()) {
        const double h = s.h_eq.constant_value() + eps_delta;
        if (!(h > 0.0)) throw PhysicalStateError("object grounded: h_eq + eps*delta <= 0");
        c.alpha = 1.0 / h;
        c.alpha_prime = -1.0 / (h * h);
        c.beta = 0.5 * (l * l / 3.0) / (h * h);
        c.edge_inverse_depth = 1.0 / h;
        c.tau2 = 3.0 * k2 * s.mass + (l * l / 3.0) / h + k2 / h;
        return c;
    }
    auto depth = [&](double x) {
        const double h = s.h_eq(x) + eps_delta;
        if (!(h > 0.0)) throw PhysicalStateError("object grounded: h_eq + eps*delta <= 0");
        return h;
    };
    const double w = 1.0 / (2.0 * l);
    c.alpha = w * simpson([&](double x) { return 1.0 / depth(x); }, -l, l, kQuadraturePoints);
    c.alpha_prime =
        -w * simpson([&](double x) { double h = depth(x); return 1.0 / (h * h); }, -l, l,
                     kQuadraturePoints);
    c.beta = 0.5 * w *
             simpson([&](double x) { double h = depth(x); return x * x / (h * h); }, -l, l,
                     kQuadraturePoints);
    const double moment = w * simpson([&](double x) { return x * x / depth(x); }, -l, l,
                                      kQuadraturePoints);
    c.edge_inverse_depth = 0.5 * (1.0 / depth(l) + 1.0 / depth(-l));
    c.tau2 = 3.0 * k2 * s.mass + moment + k2 * c.edge_inverse_depth;
    return c;
}

CouplingMatrix assemble_and_invert_M(const PhysicalSetup& s, const GeometryCoeffs& c,
                                     double zu_plus, double zu_minus) {
    const EdgeDepths e = edge_depths(s, zu_plus, zu_minus);
    const double k = s.kappa, l = s.ell;
    const double A = c.alpha + (k / l) * e.mean();
    const double B = c.tau2 + k * l * e.mean();
    const double J = e.jump();
    const double D = -4.0 * A * B + k * k * J * J;
    if (std::abs(D) < 1e-14) throw SingularMatrixError("coupling matrix is singular");

    CouplingMatrix out;
    out.det = D;
    auto& m = out.m;
    m[0] = {A, -0.5 * k * J, 0.0, 0.0};
    m[1] = {-0.5 * k * J, B, 0.0, 0.0};
    m[2] = {-k, l * k, k * k, 0.0};
    m[3] = {k, l * k, 0.0, k * k};

    auto& v = out.inv;
    v[0] = {-4.0 * B / D, -2.0 * k * J / D, 0.0, 0.0};
    v[1] = {-2.0 * k * J / D, -4.0 * A / D, 0.0, 0.0};
    v[2] = {-4.0 / (k * D) * (c.tau2 + k * l * e.a_minus), 4.0 / (k * D) * (k * e.a_minus + l * c.alpha),
            1.0 / (k * k), 0.0};
    v[3] = {4.0 / (k * D) * (c.tau2 + k * l * e.a_plus), 4.0 / (k * D) * (k * e.a_plus + l * c.alpha),
            0.0, 1.0 / (k * k)};
    return out;
}

std::array<double, 4> quadratic_terms(const PhysicalSetup& s, const GeometryCoeffs& c,
                                      double qi, double dd, double zp, double zm) {
    const EdgeDepths e = edge_depths(s, zp, zm);
    const double l = s.ell;
    const double ap = e.a_plus, am = e.a_minus;

    const double q_i = -(ap * zp * zp - am * zm * zm) / (4.0 * l) + 0.25 * l * e.jump_sq() * dd * dd +
                       e.jump_sq() * qi * qi / (4.0 * l) - (c.alpha_prime + e.mean_sq()) * dd * qi;
    const double q_delta = 0.25 * (ap * zp * zp + am * zm * zm) +
                           (c.beta - 0.5 * l * l * e.mean_sq()) * dd * dd +
                           0.5 * (c.alpha_prime - e.mean_sq()) * qi * qi +
                           0.5 * l * e.jump_sq() * dd * qi;
    const double q_plus = -0.5 * zp * zp - ap * qi * qi - l * l * ap * dd * dd + 2.0 * l * ap * qi * dd;
    const double q_minus = -0.5 * zm * zm - am * qi * qi - l * l * am * dd * dd - 2.0 * l * am * qi * dd;
    return {q_i, q_delta, q_plus, q_minus};
}

std::array<double, 7> rhs_G(const Theta& th, double r_plus, double r_minus, double f_ext,
                            const PhysicalSetup& s) {
    const GeometryCoeffs c = geometry_coeffs(s, s.epsilon * th.delta);
    const CouplingMatrix M = assemble_and_invert_M(s, c, th.zu_plus, th.zu_minus);
    const EdgeDepths e = edge_depths(s, th.zu_plus, th.zu_minus);
    const auto Q = quadratic_terms(s, c, th.qi_avg, th.delta_dot, th.zu_plus, th.zu_minus);
    const double eps = s.epsilon;

    const std::array<double, 4> x = {
        eps * Q[0] - (e.a_plus * r_plus - e.a_minus * r_minus) / (2.0 * s.ell),
        -th.delta + eps * Q[1] + 0.5 * (e.a_plus * r_plus + e.a_minus * r_minus) + f_ext,
        -th.zu_plus + eps * Q[2] + r_plus,
        -th.zu_minus + eps * Q[3] + r_minus,
    };
    std::array<double, 7> g{};
    for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += M.inv[i][j] * x[j];
        g[i] = acc;
    }
    g[4] = th.delta_dot;
    g[5] = th.zu_plus_dot;
    g[6] = th.zu_minus_dot;
    return g;
}

std::array<double, 5> rhs_G_forced(const ForcedTheta& th, double r_plus, double r_minus,
                                   const MotionSample& mo, const PhysicalSetup& s) {
    const GeometryCoeffs c = geometry_coeffs(s, s.epsilon * mo.delta);
    const EdgeDepths e = edge_depths(s, th.zu_plus, th.zu_minus);
    const auto Q = quadratic_terms(s, c, th.qi_avg, mo.delta_dot, th.zu_plus, th.zu_minus);
    const double k = s.kappa, l = s.ell, eps = s.epsilon;
    const double A = c.alpha + (k / l) * e.mean();

    const double x1 = eps * Q[0] - (e.a_plus * r_plus - e.a_minus * r_minus) / (2.0 * l) +
                      0.5 * k * e.jump() * mo.delta_ddot;
    const double x2 = -th.zu_plus + eps * Q[2] + r_plus - l * k * mo.delta_ddot;
    const double x3 = -th.zu_minus + eps * Q[3] + r_minus - l * k * mo.delta_ddot;

    const double g1 = x1 / A;
    return {g1, (x2 + k * g1) / (k * k), (x3 - k * g1) / (k * k), th.zu_plus_dot, th.zu_minus_dot};
}

std::array<double, 4> rhs_G_symmetric(const SymmetricTheta& th, double r_plus, double f_ext,
                                      const PhysicalSetup& s) {
    const GeometryCoeffs c = geometry_coeffs(s, s.epsilon * th.delta);
    const double h = 1.0 + s.epsilon * th.zu_plus;
    if (!(h > 0.0)) throw PhysicalStateError("non-positive water depth at the contact point");
    const double a = 1.0 / h;
    const double k = s.kappa, l = s.ell, eps = s.epsilon;
    const double dd = th.delta_dot, z = th.zu_plus;

    const double q_delta = 0.5 * a * z * z + (c.beta - 0.5 * l * l * a * a) * dd * dd;
    const double q_plus = -0.5 * z * z - l * l * a * dd * dd;
    const double x1 = -th.delta + eps * q_delta + a * r_plus + f_ext;
    const double x2 = -z + eps * q_plus + r_plus;

    const double g1 = x1 / (c.tau2 + k * l * a);
    const double g2 = (x2 - l * k * g1) / (k * k);
    return {g1, g2, dd, th.zu_plus_dot};
}

SourcePair source_coeffs(const Theta& th, double r_plus, double r_minus, double f_ext,
                         const PhysicalSetup& s) {
    const auto g = rhs_G(th, r_plus, r_minus, f_ext, s);
    return {g[0] - s.ell * g[1], g[0] + s.ell * g[1]};
}

double control_force(const ForcedTheta& th, double r_plus, double r_minus, const MotionSample& mo,
                     const PhysicalSetup& s) {
    const GeometryCoeffs c = geometry_coeffs(s, s.epsilon * mo.delta);
    const CouplingMatrix M = assemble_and_invert_M(s, c, th.zu_plus, th.zu_minus);
    const EdgeDepths e = edge_depths(s, th.zu_plus, th.zu_minus);
    const auto Q = quadratic_terms(s, c, th.qi_avg, mo.delta_dot, th.zu_plus, th.zu_minus);
    const double k = s.kappa, l = s.ell, eps = s.epsilon;
    const double A = c.alpha + (k / l) * e.mean();
    const double J = e.jump();

    const double mean_r = 0.5 * (e.a_plus * r_plus + e.a_minus * r_minus);
    const double jump_r = e.a_plus * r_plus - e.a_minus * r_minus;
    return mo.delta - mean_r - eps * Q[1] - M.det / (4.0 * A) * mo.delta_ddot -
           0.5 * k * J / A * (eps * Q[0] - jump_r / (2.0 * l));
}

}  // namespace wsi
