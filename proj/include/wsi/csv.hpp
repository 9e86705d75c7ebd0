#pragma once
#include <string>
#include <vector>

#include "wsi/grid.hpp"
#include "wsi/state.hpp"
#include "wsi/stepper.hpp"

namespace wsi {

// Shortest round-trip text for a double ("%.17g").
std::string format_double(double v);

// t, delta, delta_dot, qi_avg, zu_plus, zu_minus, volume; every `every`-th row plus the last.
void write_diagnostics_csv(const std::string& path, const std::vector<Diagnostics>& series, int every = 1);

// x, zeta, q over all nodes, left half-line first, increasing x.
void write_fields_csv(const std::string& path, const Grid& grid, const State& state);

}  // namespace wsi
