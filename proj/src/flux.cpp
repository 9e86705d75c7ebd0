#include "wsi/flux.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wsi/errors.hpp"

namespace wsi {

double shallow_flux(double zeta, double q, double epsilon) {
    if (epsilon == 0.0) return zeta;
    const double h = 1.0 + epsilon * zeta;
    if (!(h > 0.0)) throw PhysicalStateError("vacuum state: 1 + eps*zeta <= 0");
    // (h^2 - 1)/(2 eps) written without the cancellation
    return epsilon * q * q / h + zeta + 0.5 * epsilon * zeta * zeta;
}

double source_shape(double x_offset, double kappa) { return std::exp(-std::abs(x_offset) / kappa); }

GenerationSource generation_source(std::span<const double> g, long n, int order, double dt,
                                   long first_step) {
    const long size = static_cast<long>(g.size());
    auto at = [&](long step) {
        const long i = step - first_step;
        if (i < 0 || i >= size)
            throw std::out_of_range("generation_source: no sample for step " + std::to_string(step));
        return g[static_cast<std::size_t>(i)];
    };
    GenerationSource out;
    if (order == 1) {
        out.s = (at(n + 1) - at(n)) / dt;
    } else if (order == 2) {
        out.s = (at(n + 1) - at(n - 1)) / (2.0 * dt);
        out.s_star = (at(n + 2) - at(n)) / (2.0 * dt);
    } else {
        throw std::invalid_argument("generation_source: order must be 1 or 2");
    }
    return out;
}

}  // namespace wsi
