#include "wsi/periodic.hpp"

#include <cmath>

#include "wsi/coupling.hpp"
#include "wsi/errors.hpp"

namespace wsi {

namespace {

double interior_alpha(const PhysicalSetup& s) { return geometry_coeffs(s, 0.0).alpha; }

bool close(double a, double b) { return std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(b)); }

// One travelling component amp * trig(k y + dir * omega t) and its derivatives.
struct Wave {
    double v, y, t, tt, tyy;
};

Wave component(double amp, bool is_cos, double dir, double k, double w, double y, double t) {
    const double ph = k * y + dir * w * t;
    const double f = is_cos ? std::cos(ph) : std::sin(ph);
    const double df = is_cos ? -std::sin(ph) : std::cos(ph);
    Wave c;
    c.v = amp * f;
    c.y = amp * k * df;
    c.t = amp * dir * w * df;
    c.tt = -w * w * c.v;
    c.tyy = -k * k * c.t;
    return c;
}

}  // namespace

PeriodicSolutionSpec PeriodicSolutionSpec::make(double k, double zc_plus, double zc_minus,
                                                double qs_plus, double qs_minus,
                                                const PhysicalSetup& setup) {
    if (k == 0.0) throw ConfigError("periodic solution: k must be nonzero");
    PeriodicSolutionSpec p;
    const double a = interior_alpha(setup);
    const double kap2 = setup.kappa * setup.kappa;
    p.k = k;
    p.omega = std::sqrt(k * k / (1.0 + kap2 * k * k));
    p.zeta_c_plus = zc_plus;
    p.zeta_c_minus = zc_minus;
    p.q_s_plus = qs_plus;
    p.q_s_minus = qs_minus;
    p.q_c = -(qs_plus - qs_minus) / (2.0 * setup.ell * a * k);
    p.zeta_s = (zc_plus - zc_minus) / (2.0 * setup.ell * a * k);
    return p;
}

void PeriodicSolutionSpec::validate(const PhysicalSetup& setup) const {
    if (setup.epsilon != 0.0) throw ConfigError("periodic solution is linear: epsilon must be 0");
    const double kap2 = setup.kappa * setup.kappa;
    if (k == 0.0 || omega == 0.0) throw ConfigError("periodic solution: k and omega must be nonzero");
    if (!close(omega * omega, k * k / (1.0 + kap2 * k * k)))
        throw ConfigError("periodic solution: dispersion relation violated");
    const double a = interior_alpha(setup);
    if (!close(q_c, -(q_s_plus - q_s_minus) / (2.0 * setup.ell * a * k)))
        throw ConfigError("periodic solution: q_c constraint violated");
    if (!close(zeta_s, (zeta_c_plus - zeta_c_minus) / (2.0 * setup.ell * a * k)))
        throw ConfigError("periodic solution: zeta_s constraint violated");
}

PeriodicSample fixed_object_exact(const PeriodicSolutionSpec& sp, const PhysicalSetup& setup,
                                  double t, double x) {
    sp.validate(setup);
    if (std::abs(x) < setup.ell) throw std::invalid_argument("fixed_object_exact: x under the object");
    const bool plus = x > 0.0;
    const double y = plus ? x - setup.ell : x + setup.ell;
    const double zc = plus ? sp.zeta_c_plus : sp.zeta_c_minus;
    const double qs = plus ? sp.q_s_plus : sp.q_s_minus;
    const double k = sp.k, w = sp.omega;

    const Wave zeta_parts[4] = {
        component(0.5 * k * (zc + sp.q_c), true, -1.0, k, w, y, t),
        component(0.5 * k * (zc - sp.q_c), true, +1.0, k, w, y, t),
        component(0.5 * k * (sp.zeta_s + qs), false, -1.0, k, w, y, t),
        component(0.5 * k * (sp.zeta_s - qs), false, +1.0, k, w, y, t),
    };
    const Wave q_parts[4] = {
        component(0.5 * w * (zc + sp.q_c), true, -1.0, k, w, y, t),
        component(-0.5 * w * (zc - sp.q_c), true, +1.0, k, w, y, t),
        component(0.5 * w * (sp.zeta_s + qs), false, -1.0, k, w, y, t),
        component(-0.5 * w * (sp.zeta_s - qs), false, +1.0, k, w, y, t),
    };
    PeriodicSample out;
    for (const Wave& c : zeta_parts) {
        out.zeta += c.v;
        out.zeta_x += c.y;
        out.zeta_t += c.t;
        out.zeta_tt += c.tt;
    }
    for (const Wave& c : q_parts) {
        out.q += c.v;
        out.q_x += c.y;
        out.q_t += c.t;
        out.q_txx += c.tyy;
    }
    out.qi_avg = w * (sp.q_c * std::cos(w * t) - sp.zeta_s * std::sin(w * t));
    out.qi_avg_t = -w * w * (sp.q_c * std::sin(w * t) + sp.zeta_s * std::cos(w * t));
    return out;
}

}  // namespace wsi
