#pragma once
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "wsi/grid.hpp"
#include "wsi/helmholtz.hpp"
#include "wsi/setup.hpp"
#include "wsi/state.hpp"

namespace wsi {

enum class SchemeOrder { LaxFriedrichs = 1, MacCormack = 2 };

struct SchemeConfig {
    SchemeOrder order = SchemeOrder::MacCormack;
    double dt_over_dx = 0.9;
    double viscosity_nu = 2.136;
    int viscosity_cells = 12;
    bool viscosity = false;  // only used by MacCormack

    void validate(int n_cells) const;
};

using DischargeLaw = std::function<double(double)>;
using MotionLaw = std::function<MotionSample(double)>;
// Force on the object from time, coupling state and the contact values of R1 f_sw.
using ForceLaw = std::function<double(double, const Theta&, double, double)>;

// Object moves under the waves and an optional external force.
struct FreeMotion {
    ForceLaw force;
};
// Mirror-symmetric flow: only the right half-line is evolved.
struct SymmetricMotion {
    ForceLaw force;
};
// Object follows a prescribed trajectory (fixed when the law is empty).
struct PrescribedMotion {
    MotionLaw motion;
};
// No object: the discharge is imposed at the inner end of each half-line.
// Leave `minus` empty for a single half-line.
struct GeneratedDischarge {
    DischargeLaw plus;
    DischargeLaw minus;
};

using ContactModel = std::variant<FreeMotion, SymmetricMotion, PrescribedMotion, GeneratedDischarge>;

// Outer end of a half-line. Empty discharge copies the neighbouring cell.
struct FarBoundary {
    DischargeLaw discharge;
    bool generating() const { return static_cast<bool>(discharge); }
};

struct Diagnostics {
    double t = 0.0;
    double delta = 0.0;
    double delta_dot = 0.0;
    double qi_avg = 0.0;
    double zu_plus = 0.0;
    double zu_minus = 0.0;
    double volume = 0.0;
};

class Solver {
public:
    Solver(PhysicalSetup setup, Grid grid, SchemeConfig config, ContactModel contact, State initial,
           Theta theta0, FarBoundary far_plus = {}, FarBoundary far_minus = {});

    void step();
    void step_lax_friedrichs();
    void step_maccormack();

    double time() const { return static_cast<double>(step_) * dt_; }
    long step_index() const { return step_; }
    double dt() const { return dt_; }
    const Grid& grid() const { return grid_; }
    const PhysicalSetup& setup() const { return setup_; }
    const SchemeConfig& config() const { return config_; }
    const State& state() const { return state_; }

    // Coupling state expanded to the 7-component layout.
    Theta theta() const;
    Diagnostics diagnostics() const;
    // Contact values of R1 f_sw for the current state.
    std::pair<double, double> r1_traces() const;
    // Second-order extrapolation of zeta from the interior cells to each contact point.
    std::pair<double, double> extrapolated_contact_zeta() const;

private:
    struct Side;
    struct StageInput;
    struct StageOutput;

    int n_sides() const { return single_line_ ? 1 : 2; }
    HalfLine& line(int side) { return side == 0 ? state_.plus : state_.minus; }
    const HalfLine& line(int side) const { return side == 0 ? state_.plus : state_.minus; }

    Theta expand(const std::vector<double>& y, double t) const;
    double contact_q(const std::vector<double>& y, int side, double t) const;
    double contact_zeta(const std::vector<double>& y, int side) const;
    int far_offset(int side) const;

    void nonlocal_flux(const HalfLine& u, std::vector<double>& f, std::vector<double>& v) const;
    StageOutput evaluate(double t, long n, bool star, const std::vector<double>& y,
                         const double r[2], const double rf[2]) const;
    void set_boundary_nodes(double t);
    void check_depth(const HalfLine& u, const char* stage) const;
    void finish_step();

    PhysicalSetup setup_;
    Grid grid_;
    SchemeConfig config_;
    ContactModel contact_;
    FarBoundary far_[2];
    HelmholtzWorkspace helmholtz_;
    State state_;
    std::vector<double> y_;  // coupling unknowns, then far-boundary traces
    int model_dim_ = 0;
    bool single_line_ = false;
    double dt_ = 0.0;
    long step_ = 0;
    std::vector<double> shape_;  // exp(-k dx / kappa), k = 0..N+1
};

}  // namespace wsi
