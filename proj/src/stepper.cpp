#include "wsi/stepper.hpp"

#include <cmath>
#include <string>

#include "wsi/coupling.hpp"
#include "wsi/errors.hpp"
#include "wsi/flux.hpp"

namespace wsi {

namespace {

enum Model { kFree = 0, kSymmetric = 1, kPrescribed = 2, kGenerated = 3 };

// Acceleration of the surface elevation at a boundary where the discharge is q_b.
// orientation is +1 when the fluid lies on the +x side of the boundary.
double trace_acceleration(double zeta, double q_b, double q_b_dot, double r, double orientation,
                          const PhysicalSetup& s) {
    const double k2 = s.kappa * s.kappa;
    const double h = 1.0 + s.epsilon * zeta;
    if (!(h > 0.0)) throw PhysicalStateError("non-positive depth at a generating boundary");
    return -zeta / k2 - s.epsilon / k2 * (0.5 * zeta * zeta + q_b * q_b / h) + r / k2 +
           orientation * q_b_dot / s.kappa;
}

GenerationSource law_source(const DischargeLaw& g, long n, int order, double dt) {
    const double w[4] = {g((n - 1) * dt), g(n * dt), g((n + 1) * dt), g((n + 2) * dt)};
    return generation_source(w, n, order, dt, n - 1);
}

MotionSample motion_at(const MotionLaw& law, double t) { return law ? law(t) : MotionSample{}; }

}  // namespace

void SchemeConfig::validate(int n_cells) const {
    if (!(dt_over_dx > 0.0 && dt_over_dx <= 1.0)) throw ConfigError("dt_over_dx must lie in (0, 1]");
    if (viscosity_cells < 0 || viscosity_cells >= n_cells)
        throw ConfigError("viscosity_cells must satisfy 0 <= n0 < N");
    if (!(viscosity_nu >= 0.0)) throw ConfigError("viscosity_nu must be >= 0");
    if (order != SchemeOrder::LaxFriedrichs && order != SchemeOrder::MacCormack)
        throw ConfigError("scheme order must be 1 or 2");
}

struct Solver::StageOutput {
    std::vector<double> dy;
    double s[2] = {0.0, 0.0};
    double s_far[2] = {0.0, 0.0};
};

Solver::Solver(PhysicalSetup setup, Grid grid, SchemeConfig config, ContactModel contact,
               State initial, Theta theta0, FarBoundary far_plus, FarBoundary far_minus)
    : setup_(std::move(setup)), grid_(grid), config_(config), contact_(std::move(contact)),
      far_{std::move(far_plus), std::move(far_minus)}, state_(std::move(initial)) {
    config_.validate(grid_.n_cells);
    if (grid_.n_cells < 3) throw ConfigError("solver needs at least 3 cells per half-line");
    dt_ = config_.dt_over_dx * grid_.dx;
    helmholtz_ = HelmholtzWorkspace(setup_.kappa, grid_.dx, grid_.n_cells);

    const int model = static_cast<int>(contact_.index());
    if (model == kGenerated) {
        const auto& gen = std::get<GeneratedDischarge>(contact_);
        if (!gen.plus) throw ConfigError("generated discharge needs a law on the right half-line");
        single_line_ = !gen.minus;
    } else {
        single_line_ = model == kSymmetric;
    }

    const int nodes = grid_.nodes();
    if (state_.plus.nodes() != nodes) throw ConfigError("initial state does not match the grid");
    if (!single_line_ || model == kSymmetric) {
        if (state_.minus.nodes() != nodes) throw ConfigError("initial state lacks the left half-line");
    }

    switch (model) {
        case kFree: {
            const auto a = theta0.to_array();
            y_.assign(a.begin(), a.end());
            break;
        }
        case kSymmetric:
            y_ = {theta0.delta_dot, theta0.zu_plus_dot, theta0.delta, theta0.zu_plus};
            break;
        case kPrescribed:
            y_ = {theta0.qi_avg, theta0.zu_plus_dot, theta0.zu_minus_dot, theta0.zu_plus,
                  theta0.zu_minus};
            break;
        default:
            y_ = {theta0.zu_plus_dot, theta0.zu_plus};
            if (!single_line_) {
                y_.push_back(theta0.zu_minus_dot);
                y_.push_back(theta0.zu_minus);
            }
    }
    model_dim_ = static_cast<int>(y_.size());

    shape_.resize(nodes);
    for (int k = 0; k < nodes; ++k) shape_[k] = source_shape(k * grid_.dx, setup_.kappa);

    // Far generating ends carry their own trace state, started from the data.
    const int N = grid_.n_cells;
    for (int s = 0; s < n_sides(); ++s) {
        if (!far_[s].generating()) continue;
        const HalfLine& u = line(s);
        const double sigma = s == 0 ? 1.0 : -1.0;
        const double dqdx = sigma * (3.0 * u.q[N + 1] - 4.0 * u.q[N] + u.q[N - 1]) / (2.0 * grid_.dx);
        y_.push_back(-dqdx);
        y_.push_back(u.zeta[N + 1]);
    }
    set_boundary_nodes(0.0);
    for (int s = 0; s < n_sides(); ++s) check_depth(line(s), "initial");
}

int Solver::far_offset(int side) const {
    int off = model_dim_;
    for (int s = 0; s < side; ++s)
        if (far_[s].generating()) off += 2;
    return far_[side].generating() ? off : -1;
}

Theta Solver::expand(const std::vector<double>& y, double t) const {
    Theta th;
    switch (contact_.index()) {
        case kFree: {
            std::array<double, 7> a{};
            for (int i = 0; i < 7; ++i) a[i] = y[i];
            return Theta::from_array(a);
        }
        case kSymmetric:
            th.delta_dot = y[0];
            th.zu_plus_dot = th.zu_minus_dot = y[1];
            th.delta = y[2];
            th.zu_plus = th.zu_minus = y[3];
            return th;
        case kPrescribed: {
            const MotionSample mo = motion_at(std::get<PrescribedMotion>(contact_).motion, t);
            th.qi_avg = y[0];
            th.delta_dot = mo.delta_dot;
            th.zu_plus_dot = y[1];
            th.zu_minus_dot = y[2];
            th.delta = mo.delta;
            th.zu_plus = y[3];
            th.zu_minus = y[4];
            return th;
        }
        default:
            th.zu_plus_dot = y[0];
            th.zu_plus = y[1];
            if (!single_line_) {
                th.zu_minus_dot = y[2];
                th.zu_minus = y[3];
            }
            return th;
    }
}

double Solver::contact_q(const std::vector<double>& y, int side, double t) const {
    const double sign = side == 0 ? -1.0 : 1.0;  // q = <q_i> -/+ ell delta_dot
    const double l = setup_.ell;
    switch (contact_.index()) {
        case kFree:
            return y[0] + sign * l * y[1];
        case kSymmetric:
            return sign * l * y[0];
        case kPrescribed:
            return y[0] + sign * l * motion_at(std::get<PrescribedMotion>(contact_).motion, t).delta_dot;
        default: {
            const auto& gen = std::get<GeneratedDischarge>(contact_);
            return side == 0 ? gen.plus(t) : gen.minus(t);
        }
    }
}

double Solver::contact_zeta(const std::vector<double>& y, int side) const {
    switch (contact_.index()) {
        case kFree:
            return side == 0 ? y[5] : y[6];
        case kSymmetric:
            return y[3];
        case kPrescribed:
            return side == 0 ? y[3] : y[4];
        default:
            return y[2 * side + 1];
    }
}

void Solver::nonlocal_flux(const HalfLine& u, std::vector<double>& f, std::vector<double>& v) const {
    const int N = grid_.n_cells;
    f.resize(N);
    v.resize(N);
    for (int k = 1; k <= N; ++k) f[k - 1] = shallow_flux(u.zeta[k], u.q[k], setup_.epsilon);
    helmholtz_.solve(f, v);
}

Solver::StageOutput Solver::evaluate(double t, long n, bool star, const std::vector<double>& y,
                                     const double r[2], const double rf[2]) const {
    StageOutput out;
    out.dy.assign(y.size(), 0.0);
    const double l = setup_.ell;
    const int order = static_cast<int>(config_.order);

    switch (contact_.index()) {
        case kFree: {
            const auto& law = std::get<FreeMotion>(contact_).force;
            const Theta th = expand(y, t);
            const double f_ext = law ? law(t, th, r[0], r[1]) : 0.0;
            const auto g = rhs_G(th, r[0], r[1], f_ext, setup_);
            for (int i = 0; i < 7; ++i) out.dy[i] = g[i];
            out.s[0] = g[0] - l * g[1];
            out.s[1] = g[0] + l * g[1];
            break;
        }
        case kSymmetric: {
            const auto& law = std::get<SymmetricMotion>(contact_).force;
            const SymmetricTheta th{y[0], y[1], y[2], y[3]};
            const double f_ext = law ? law(t, expand(y, t), r[0], r[0]) : 0.0;
            const auto g = rhs_G_symmetric(th, r[0], f_ext, setup_);
            for (int i = 0; i < 4; ++i) out.dy[i] = g[i];
            out.s[0] = -l * g[0];
            out.s[1] = l * g[0];
            break;
        }
        case kPrescribed: {
            const MotionSample mo = motion_at(std::get<PrescribedMotion>(contact_).motion, t);
            const ForcedTheta th{y[0], y[1], y[2], y[3], y[4]};
            const auto g = rhs_G_forced(th, r[0], r[1], mo, setup_);
            for (int i = 0; i < 5; ++i) out.dy[i] = g[i];
            out.s[0] = g[0] - l * mo.delta_ddot;
            out.s[1] = g[0] + l * mo.delta_ddot;
            break;
        }
        default: {
            const auto& gen = std::get<GeneratedDischarge>(contact_);
            for (int s = 0; s < n_sides(); ++s) {
                const DischargeLaw& law = s == 0 ? gen.plus : gen.minus;
                const GenerationSource src = law_source(law, n, order, dt_);
                const double qdot = star ? src.s_star : src.s;
                const double orientation = s == 0 ? 1.0 : -1.0;
                out.dy[2 * s] = trace_acceleration(y[2 * s + 1], law(t), qdot, r[s], orientation, setup_);
                out.dy[2 * s + 1] = y[2 * s];
                out.s[s] = qdot;
            }
        }
    }

    for (int s = 0; s < n_sides(); ++s) {
        const int off = far_offset(s);
        if (off < 0) continue;
        const DischargeLaw& law = far_[s].discharge;
        const GenerationSource src = law_source(law, n, order, dt_);
        const double qdot = star ? src.s_star : src.s;
        const double orientation = s == 0 ? -1.0 : 1.0;
        out.dy[off] = trace_acceleration(y[off + 1], law(t), qdot, rf[s], orientation, setup_);
        out.dy[off + 1] = y[off];
        out.s_far[s] = qdot;
    }
    return out;
}

void Solver::set_boundary_nodes(double t) {
    const int N = grid_.n_cells;
    for (int s = 0; s < n_sides(); ++s) {
        HalfLine& u = line(s);
        u.q[0] = contact_q(y_, s, t);
        u.zeta[0] = contact_zeta(y_, s);
        const int off = far_offset(s);
        if (off >= 0) {
            u.zeta[N + 1] = y_[off + 1];
            u.q[N + 1] = far_[s].discharge(t);
        } else {
            u.zeta[N + 1] = u.zeta[N];
            u.q[N + 1] = u.q[N];
        }
    }
    if (contact_.index() == kSymmetric) {
        state_.minus.zeta = state_.plus.zeta;
        state_.minus.q = state_.plus.q;
        for (double& q : state_.minus.q) q = -q;
    }
}

void Solver::check_depth(const HalfLine& u, const char* stage) const {
    for (int k = 0; k < u.nodes(); ++k) {
        const double z = u.zeta[k], q = u.q[k];
        if (!std::isfinite(z) || !std::isfinite(q))
            throw SolverAbort(std::string("non-finite value in ") + stage + " state at node " +
                                  std::to_string(k), step_);
        if (!(1.0 + setup_.epsilon * z > 0.0))
            throw SolverAbort(std::string("water depth vanished in ") + stage + " state at node " +
                                  std::to_string(k), step_);
    }
}

void Solver::finish_step() {
    ++step_;
    for (double v : y_)
        if (!std::isfinite(v)) throw SolverAbort("non-finite coupling state", step_);
    set_boundary_nodes(time());
    for (int s = 0; s < n_sides(); ++s) check_depth(line(s), "updated");
}

void Solver::step() {
    if (config_.order == SchemeOrder::LaxFriedrichs)
        step_lax_friedrichs();
    else
        step_maccormack();
}

void Solver::step_lax_friedrichs() {
    const int N = grid_.n_cells;
    const double lam = dt_ / grid_.dx;
    const double t = time();

    std::vector<double> f, v[2];
    double r[2] = {0.0, 0.0}, rf[2] = {0.0, 0.0};
    for (int s = 0; s < n_sides(); ++s) {
        nonlocal_flux(line(s), f, v[s]);
        r[s] = trace_r1(v[s]);
        rf[s] = 4.0 / 3.0 * v[s][N - 1] - 1.0 / 3.0 * v[s][N - 2];
    }
    const StageOutput st = evaluate(t, step_, false, y_, r, rf);

    std::vector<double> V(N + 2), phi_z(N + 1), phi_q(N + 1);
    for (int s = 0; s < n_sides(); ++s) {
        HalfLine& u = line(s);
        const double sigma = s == 0 ? 1.0 : -1.0;
        V[0] = r[s];
        for (int k = 1; k <= N; ++k) V[k] = v[s][k - 1];
        V[N + 1] = far_[s].generating() ? rf[s] : V[N];
        for (int k = 0; k <= N; ++k) {
            phi_z[k] = 0.5 * sigma * (u.q[k + 1] + u.q[k]) - 0.5 / lam * (u.zeta[k + 1] - u.zeta[k]);
            phi_q[k] = 0.5 * sigma * (V[k + 1] + V[k]) - 0.5 / lam * (u.q[k + 1] - u.q[k]);
        }
        for (int k = 1; k <= N; ++k) {
            u.zeta[k] -= lam * (phi_z[k] - phi_z[k - 1]);
            u.q[k] += -lam * (phi_q[k] - phi_q[k - 1]) +
                      dt_ * (st.s[s] * shape_[k] + st.s_far[s] * shape_[N + 1 - k]);
        }
    }
    for (std::size_t i = 0; i < y_.size(); ++i) y_[i] += dt_ * st.dy[i];
    // Boundary trace oscillators: semi-implicit Euler keeps them from growing.
    const int first_trace = contact_.index() == kGenerated ? 0 : model_dim_;
    for (std::size_t i = first_trace; i + 1 < y_.size(); i += 2) y_[i + 1] += dt_ * dt_ * st.dy[i];
    finish_step();
}

void Solver::step_maccormack() {
    const int N = grid_.n_cells;
    const double lam = dt_ / grid_.dx;
    const double t0 = time();
    const double t1 = static_cast<double>(step_ + 1) * dt_;

    std::vector<double> f, v[2];
    double r[2] = {0.0, 0.0}, rf[2] = {0.0, 0.0};
    for (int s = 0; s < n_sides(); ++s) {
        nonlocal_flux(line(s), f, v[s]);
        r[s] = trace_r1(v[s]);
        rf[s] = 4.0 / 3.0 * v[s][N - 1] - 1.0 / 3.0 * v[s][N - 2];
    }
    const StageOutput st = evaluate(t0, step_, false, y_, r, rf);

    // predictor
    std::vector<double> V[2];
    HalfLine pred[2];
    for (int s = 0; s < n_sides(); ++s) {
        const HalfLine& u = line(s);
        const double sigma = s == 0 ? 1.0 : -1.0;
        V[s].resize(N + 2);
        V[s][0] = r[s];
        for (int k = 1; k <= N; ++k) V[s][k] = v[s][k - 1];
        V[s][N + 1] = far_[s].generating() ? rf[s] : V[s][N];
        pred[s] = HalfLine(N + 2);
        for (int k = 1; k <= N; ++k) {
            pred[s].zeta[k] = u.zeta[k] - sigma * lam * (u.q[k] - u.q[k - 1]);
            pred[s].q[k] = u.q[k] - sigma * lam * (V[s][k] - V[s][k - 1]) +
                           dt_ * (st.s[s] * shape_[k] + st.s_far[s] * shape_[N + 1 - k]);
        }
    }
    std::vector<double> y_star(y_);
    for (std::size_t i = 0; i < y_.size(); ++i) y_star[i] += dt_ * st.dy[i];

    double r_star[2] = {0.0, 0.0}, rf_star[2] = {0.0, 0.0};
    std::vector<double> v_star[2];
    for (int s = 0; s < n_sides(); ++s) {
        HalfLine& p = pred[s];
        p.zeta[0] = contact_zeta(y_star, s);
        p.q[0] = contact_q(y_star, s, t1);
        const int off = far_offset(s);
        if (off >= 0) {
            p.zeta[N + 1] = y_star[off + 1];
            p.q[N + 1] = far_[s].discharge(t1);
        } else {
            p.zeta[N + 1] = p.zeta[N];
            p.q[N + 1] = p.q[N];
        }
        check_depth(p, "predicted");
        nonlocal_flux(p, f, v_star[s]);
        r_star[s] = trace_r1(v_star[s]);
        rf_star[s] = 4.0 / 3.0 * v_star[s][N - 1] - 1.0 / 3.0 * v_star[s][N - 2];
    }
    const StageOutput st_star = evaluate(t1, step_, true, y_star, r_star, rf_star);

    // corrector
    std::vector<double> Vs(N + 2), zeta_new(N + 2), q_new(N + 2);
    for (int s = 0; s < n_sides(); ++s) {
        HalfLine& u = line(s);
        const HalfLine& p = pred[s];
        const double sigma = s == 0 ? 1.0 : -1.0;
        for (int k = 1; k <= N; ++k) Vs[k] = v_star[s][k - 1];
        Vs[N + 1] = far_[s].generating() ? rf_star[s] : Vs[N];
        const double s_near = 0.5 * (st.s[s] + st_star.s[s]);
        const double s_far = 0.5 * (st.s_far[s] + st_star.s_far[s]);
        for (int k = 1; k <= N; ++k) {
            zeta_new[k] = u.zeta[k] - sigma * 0.5 * lam * ((u.q[k] - u.q[k - 1]) + (p.q[k + 1] - p.q[k]));
            q_new[k] = u.q[k] - sigma * 0.5 * lam * ((V[s][k] - V[s][k - 1]) + (Vs[k + 1] - Vs[k])) +
                       dt_ * (s_near * shape_[k] + s_far * shape_[N + 1 - k]);
        }
        if (config_.viscosity) {
            const double c = config_.viscosity_nu * grid_.dx;
            for (int k = 1; k <= config_.viscosity_cells; ++k)
                zeta_new[k] += c * (u.zeta[k + 1] - 2.0 * u.zeta[k] + u.zeta[k - 1]);
            if (far_[s].generating())
                for (int k = N + 1 - config_.viscosity_cells; k <= N; ++k)
                    zeta_new[k] += c * (u.zeta[k + 1] - 2.0 * u.zeta[k] + u.zeta[k - 1]);
        }
        for (int k = 1; k <= N; ++k) {
            u.zeta[k] = zeta_new[k];
            u.q[k] = q_new[k];
        }
    }
    for (std::size_t i = 0; i < y_.size(); ++i) y_[i] += 0.5 * dt_ * (st.dy[i] + st_star.dy[i]);
    finish_step();
}

Theta Solver::theta() const { return expand(y_, time()); }

Diagnostics Solver::diagnostics() const {
    const Theta th = theta();
    Diagnostics d;
    d.t = time();
    d.delta = th.delta;
    d.delta_dot = th.delta_dot;
    d.qi_avg = th.qi_avg;
    d.zu_plus = th.zu_plus;
    d.zu_minus = th.zu_minus;
    const int N = grid_.n_cells;
    double vol = 0.0;
    const int sides = state_.has_minus() ? 2 : 1;
    for (int s = 0; s < sides; ++s) {
        const HalfLine& u = line(s);
        double sum = 0.5 * (u.zeta[0] + u.zeta[N + 1]);
        for (int k = 1; k <= N; ++k) sum += u.zeta[k];
        vol += sum * grid_.dx;
    }
    d.volume = vol + 2.0 * setup_.ell * th.delta;
    return d;
}

std::pair<double, double> Solver::r1_traces() const {
    std::vector<double> f, v;
    double r[2] = {0.0, 0.0};
    const int sides = state_.has_minus() ? 2 : 1;
    for (int s = 0; s < sides; ++s) {
        nonlocal_flux(line(s), f, v);
        r[s] = trace_r1(v);
    }
    return {r[0], r[1]};
}

std::pair<double, double> Solver::extrapolated_contact_zeta() const {
    auto ex = [](const HalfLine& u) { return 3.0 * u.zeta[1] - 3.0 * u.zeta[2] + u.zeta[3]; };
    return {ex(state_.plus), state_.has_minus() ? ex(state_.minus) : 0.0};
}

}  // namespace wsi
