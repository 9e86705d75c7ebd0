#pragma once
#include <functional>
#include <optional>

#include "wsi/grid.hpp"
#include "wsi/setup.hpp"
#include "wsi/state.hpp"

namespace wsi {

// Initial wave field and object data. Unset fields are zero.
struct InitialData {
    std::function<double(double)> zeta;
    std::function<double(double)> q;
    double delta = 0.0;
    // When given, must already satisfy the compatibility conditions.
    std::optional<Theta> theta;
    bool single_line = false;  // only the right half-line carries data
};

struct InitialState {
    State state;
    Theta theta;
};

// Samples the field at the nodes and derives Theta from the compatibility
// conditions (one-sided three-point derivatives at the contact points).
InitialState init_from_scenario(const PhysicalSetup& setup, const Grid& grid, const InitialData& data);

// Largest violation of the compatibility conditions, recomputed from the nodes.
double compatibility_residual(const PhysicalSetup& setup, const Grid& grid, const State& state,
                              const Theta& theta);

}  // namespace wsi
