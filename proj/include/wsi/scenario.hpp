#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "wsi/grid.hpp"
#include "wsi/setup.hpp"
#include "wsi/state.hpp"
#include "wsi/stepper.hpp"

namespace wsi {

enum class ScenarioKind {
    WaveGeneration,
    DecayLinear,
    DecayNonlinear,
    FixedLinear,
    FixedNonlinear,
    FreeFloating,
    ControlledMotion,
};

ScenarioKind parse_kind(const std::string& name);
std::string kind_name(ScenarioKind kind);

// How N maps to the mesh: N interior cells with dx = (L - ell)/(N + 1), or
// N intervals with dx = (L - ell)/N.
enum class MeshConvention { Interior, Intervals };

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::DecayLinear;

    double epsilon = 0.0;
    double mu = 0.3;
    double ell = 4.0;
    double L = 30.0;
    double h0 = 0.7;  // constant equilibrium depth under the object

    SchemeConfig scheme;
    std::string viscosity = "auto";  // auto | on | off
    std::vector<int> n_list;
    MeshConvention mesh = MeshConvention::Interior;
    double t_final = 15.0;

    // release height
    double delta0 = 0.1;
    bool symmetric_coupling = true;
    // incoming solitary wave
    double zeta_max = 0.2;
    double x0 = -15.0;
    // periodic family around a fixed object
    double k = 2.0;
    double zeta_c_plus = 0.1;
    double zeta_c_minus = 0.05;
    double q_s_plus = 0.08;
    double q_s_minus = -0.02;
    // prescribed trajectory tracked by the control force
    double forced_amplitude = 0.05;
    double forced_omega = 1.0;

    bool self_reference = false;
    int n_ref = 2400;
    int output_every = 1;

    PhysicalSetup setup() const;
    Grid grid(int N) const;
    SchemeConfig scheme_for_run() const;
    // Names of the observables compared in a convergence study.
    std::vector<std::string> observables() const;
    void validate() const;
};

// Flat `key = value` text; '#' starts a comment.
ScenarioSpec parse_scenario(std::istream& in);
ScenarioSpec load_scenario(const std::string& path);

struct RunResult {
    int N = 0;
    Grid grid;
    State final_state;
    Theta final_theta;
    std::vector<Diagnostics> series;  // one entry per step, t = 0 included
    double runtime_s = 0.0;
};

// Full simulation for one mesh size. Solver aborts propagate as SolverAbort;
// when snapshot_dir is set the last state is written there first.
RunResult run_scenario(const ScenarioSpec& spec, int N, const std::string& snapshot_dir = {});

// Assembled solver for one mesh size, for callers that drive the steps themselves.
Solver make_solver(const ScenarioSpec& spec, int N);

long step_count(const ScenarioSpec& spec, double dt);

}  // namespace wsi
