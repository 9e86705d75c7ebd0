#include "wsi/grid.hpp"

#include "wsi/errors.hpp"

namespace wsi {

Grid build_grid(double L, double ell, int N) {
    if (!(ell > 0.0)) throw ConfigError("build_grid: ell must be > 0");
    if (!(L > ell)) throw ConfigError("build_grid: need L > ell");
    if (N < 4) throw ConfigError("build_grid: need N >= 4");
    Grid g;
    g.L = L;
    g.ell = ell;
    g.n_cells = N;
    g.dx = (L - ell) / (N + 1);
    return g;
}

Grid build_half_line(double L, int N) {
    if (!(L > 0.0)) throw ConfigError("build_half_line: L must be > 0");
    if (N < 5) throw ConfigError("build_half_line: need N >= 5");
    Grid g;
    g.L = L;
    g.ell = 0.0;
    g.n_cells = N - 1;
    g.dx = L / N;
    return g;
}

}  // namespace wsi
