#include "wsi/trace_residual.hpp"

#include <stdexcept>

namespace wsi {

std::vector<double> trace_ode_residual(const TraceSeries& s, int side, double epsilon, double kappa,
                                       double dt) {
    const std::size_t m = s.zeta.size();
    if (m < 3) throw std::invalid_argument("trace_ode_residual: series too short");
    if (s.f.size() != m || s.g.size() != m || s.r.size() != m)
        throw std::invalid_argument("trace_ode_residual: series lengths differ");
    if (side != 1 && side != -1) throw std::invalid_argument("trace_ode_residual: side must be +-1");
    if (!(kappa > 0.0) || !(dt > 0.0)) throw std::invalid_argument("trace_ode_residual: bad kappa/dt");

    const double k2 = kappa * kappa, sg = side;
    std::vector<double> res(m - 2);
    for (std::size_t n = 1; n + 1 < m; ++n) {
        const double z = s.zeta[n];
        const double ztt = (s.zeta[n + 1] - 2.0 * z + s.zeta[n - 1]) / (dt * dt);
        const double qb = s.f[n] + sg * s.g[n];
        const double qb_dot = ((s.f[n + 1] - s.f[n - 1]) + sg * (s.g[n + 1] - s.g[n - 1])) / (2.0 * dt);
        res[n - 1] = ztt + z / k2 + epsilon / k2 * (0.5 * z * z + qb * qb / (1.0 + epsilon * z)) -
                     s.r[n] / k2 - sg * qb_dot / kappa;
    }
    return res;
}

}  // namespace wsi
