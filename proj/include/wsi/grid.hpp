#pragma once

namespace wsi {

// Node layout of one exterior half-line: node 0 sits on the contact point,
// nodes 1..n_cells are interior cell centers, node n_cells+1 is the outer end.
// The left half-line is the mirror image.
struct Grid {
    double L = 0.0;
    double ell = 0.0;
    double dx = 0.0;
    int n_cells = 0;

    int nodes() const { return n_cells + 2; }
    double x_right(int k) const { return ell + k * dx; }
    double x_left(int k) const { return -(ell + k * dx); }
    // Face between node k and node k+1 on the right.
    double face_right(int k) const { return ell + (k + 0.5) * dx; }
};

// Two-component grid with dx = (L - ell)/(N + 1).
Grid build_grid(double L, double ell, int N);

// Single half-line (0, L) with dx = L/N, used by the wavemaker runs.
Grid build_half_line(double L, int N);

}  // namespace wsi
