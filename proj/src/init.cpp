#include "wsi/init.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsi/errors.hpp"

namespace wsi {

namespace {

HalfLine sample(const Grid& g, const InitialData& d, bool right) {
    HalfLine u(g.nodes());
    for (int k = 0; k < g.nodes(); ++k) {
        const double x = right ? g.x_right(k) : g.x_left(k);
        u.zeta[k] = d.zeta ? d.zeta(x) : 0.0;
        u.q[k] = d.q ? d.q(x) : 0.0;
    }
    return u;
}

// -(dq/dx) at the contact node; orientation +1 on the right component.
double contact_rate(const HalfLine& u, double dx, double orientation) {
    return -orientation * (-3.0 * u.q[0] + 4.0 * u.q[1] - u.q[2]) / (2.0 * dx);
}

Theta derive_theta(const PhysicalSetup& s, const State& st, double delta) {
    Theta th;
    const HalfLine& p = st.plus;
    th.zu_plus = p.zeta[0];
    th.delta = delta;
    if (st.has_minus()) {
        const HalfLine& m = st.minus;
        th.qi_avg = 0.5 * (p.q[0] + m.q[0]);
        th.delta_dot = -(p.q[0] - m.q[0]) / (2.0 * s.ell);
        th.zu_minus = m.zeta[0];
    } else {
        th.qi_avg = p.q[0];
    }
    return th;
}

}  // namespace

InitialState init_from_scenario(const PhysicalSetup& setup, const Grid& grid, const InitialData& data) {
    InitialState out;
    out.state.plus = sample(grid, data, true);
    if (!data.single_line) out.state.minus = sample(grid, data, false);
    for (const HalfLine* u : {&out.state.plus, &out.state.minus})
        for (double z : u->zeta)
            if (!(1.0 + setup.epsilon * z > 0.0)) throw ConfigError("initial field has non-positive depth");

    Theta th = derive_theta(setup, out.state, data.delta);
    th.zu_plus_dot = contact_rate(out.state.plus, grid.dx, 1.0);
    if (out.state.has_minus()) th.zu_minus_dot = contact_rate(out.state.minus, grid.dx, -1.0);

    if (data.theta) {
        const double res = compatibility_residual(setup, grid, out.state, *data.theta);
        if (!(res <= 1e-10))
            throw ConfigError("supplied initial object state violates the compatibility conditions (residual " +
                              std::to_string(res) + ")");
        th = *data.theta;
    }
    out.theta = th;
    return out;
}

double compatibility_residual(const PhysicalSetup& setup, const Grid& grid, const State& st,
                              const Theta& th) {
    const HalfLine& p = st.plus;
    double r = 0.0;
    r = std::max(r, std::abs(p.zeta[0] - th.zu_plus));
    r = std::max(r, std::abs(contact_rate(p, grid.dx, 1.0) - th.zu_plus_dot));
    if (st.has_minus()) {
        const HalfLine& m = st.minus;
        r = std::max(r, std::abs(0.5 * (p.q[0] + m.q[0]) - th.qi_avg));
        r = std::max(r, std::abs((p.q[0] - m.q[0]) + 2.0 * setup.ell * th.delta_dot));
        r = std::max(r, std::abs(m.zeta[0] - th.zu_minus));
        r = std::max(r, std::abs(contact_rate(m, grid.dx, -1.0) - th.zu_minus_dot));
    }
    return r;
}

}  // namespace wsi
