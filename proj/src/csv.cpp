#include "wsi/csv.hpp"

#include <cstdio>
#include <fstream>

#include "wsi/errors.hpp"

namespace wsi {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_diagnostics_csv(const std::string& path, const std::vector<Diagnostics>& series, int every) {
    auto out = open_out(path);
    out << "t,delta,delta_dot,qi_avg,zu_plus,zu_minus,volume\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i % static_cast<std::size_t>(every) != 0 && i + 1 != series.size()) continue;
        const Diagnostics& d = series[i];
        out << format_double(d.t) << ',' << format_double(d.delta) << ',' << format_double(d.delta_dot)
            << ',' << format_double(d.qi_avg) << ',' << format_double(d.zu_plus) << ','
            << format_double(d.zu_minus) << ',' << format_double(d.volume) << '\n';
    }
}

void write_fields_csv(const std::string& path, const Grid& grid, const State& state) {
    auto out = open_out(path);
    out << "x,zeta,q\n";
    const auto row = [&](double x, double z, double q) {
        out << format_double(x) << ',' << format_double(z) << ',' << format_double(q) << '\n';
    };
    if (state.has_minus())
        for (int k = state.minus.nodes() - 1; k >= 0; --k)
            row(grid.x_left(k), state.minus.zeta[k], state.minus.q[k]);
    for (int k = 0; k < state.plus.nodes(); ++k) row(grid.x_right(k), state.plus.zeta[k], state.plus.q[k]);
}

}  // namespace wsi
