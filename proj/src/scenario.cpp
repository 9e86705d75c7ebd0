#include "wsi/scenario.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "wsi/coupling.hpp"
#include "wsi/csv.hpp"
#include "wsi/errors.hpp"
#include "wsi/init.hpp"
#include "wsi/periodic.hpp"
#include "wsi/soliton.hpp"

namespace wsi {

namespace {

const std::map<std::string, ScenarioKind>& kind_table() {
    static const std::map<std::string, ScenarioKind> table = {
        {"wave_generation", ScenarioKind::WaveGeneration},
        {"decay_linear", ScenarioKind::DecayLinear},
        {"decay_nonlinear", ScenarioKind::DecayNonlinear},
        {"fixed_linear", ScenarioKind::FixedLinear},
        {"fixed_nonlinear", ScenarioKind::FixedNonlinear},
        {"free_floating", ScenarioKind::FreeFloating},
        {"controlled_motion", ScenarioKind::ControlledMotion},
    };
    return table;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a number: " + v);
    }
    if (used != v.size()) throw ConfigError("key '" + key + "': trailing characters in " + v);
    return out;
}

int to_int(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    if (d != std::floor(d) || std::abs(d) > 1e9) throw ConfigError("key '" + key + "': not an integer: " + v);
    return static_cast<int>(d);
}

std::vector<int> to_int_list(const std::string& key, const std::string& v) {
    std::vector<int> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_int(key, item));
    }
    return out;
}

MotionSample forced_motion(const ScenarioSpec& s, double t) {
    const double a = s.forced_amplitude, w = s.forced_omega;
    return {a * std::sin(w * t), a * w * std::cos(w * t), -a * w * w * std::sin(w * t)};
}

// Smooth bump with unit value and zero slope at the contact point.
double contact_bump(double y) { return std::exp(-0.25 * y * y); }

void write_snapshot(const std::string& dir, int N, const Solver& solver, SolverAbort& err) {
    const std::string path = dir + "/abort_snapshot_N" + std::to_string(N) + ".csv";
    try {
        write_fields_csv(path, solver.grid(), solver.state());
        err.set_snapshot_path(path);
    } catch (const std::exception&) {
        // keep the original abort; the snapshot is best effort
    }
}

}  // namespace

ScenarioKind parse_kind(const std::string& name) {
    const auto it = kind_table().find(name);
    if (it == kind_table().end()) throw ConfigError("unknown scenario kind: " + name);
    return it->second;
}

std::string kind_name(ScenarioKind kind) {
    for (const auto& [name, k] : kind_table())
        if (k == kind) return name;
    return "unknown";
}

PhysicalSetup ScenarioSpec::setup() const {
    const double kappa = std::sqrt(mu / 3.0);
    if (kind == ScenarioKind::WaveGeneration) return PhysicalSetup::without_object(epsilon, kappa);
    return PhysicalSetup::make(epsilon, kappa, ell, DepthProfile::constant(h0));
}

Grid ScenarioSpec::grid(int N) const {
    if (kind == ScenarioKind::WaveGeneration) return build_half_line(L, N);
    return build_grid(L, ell, mesh == MeshConvention::Intervals ? N - 1 : N);
}

SchemeConfig ScenarioSpec::scheme_for_run() const {
    SchemeConfig c = scheme;
    if (viscosity == "on")
        c.viscosity = true;
    else if (viscosity == "off")
        c.viscosity = false;
    else
        c.viscosity = kind == ScenarioKind::WaveGeneration;
    return c;
}

std::vector<std::string> ScenarioSpec::observables() const {
    switch (kind) {
        case ScenarioKind::WaveGeneration:
            return {"zeta", "q"};
        case ScenarioKind::DecayLinear:
        case ScenarioKind::DecayNonlinear:
        case ScenarioKind::ControlledMotion:
            return {"delta"};
        case ScenarioKind::FixedLinear:
        case ScenarioKind::FixedNonlinear:
            return {"qi_avg"};
        case ScenarioKind::FreeFloating:
            return {"delta", "qi_avg", "zu_plus"};
    }
    return {};
}

void ScenarioSpec::validate() const {
    if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be >= 0");
    if (!(mu > 0.0)) throw ConfigError("mu must be > 0");
    if (!(L > 0.0)) throw ConfigError("L must be > 0");
    if (kind != ScenarioKind::WaveGeneration && !(L > ell)) throw ConfigError("L must exceed ell");
    if (!(t_final >= 0.0)) throw ConfigError("T_final must be >= 0");
    if (n_list.empty()) throw ConfigError("N list is empty");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1]) throw ConfigError("N list must be strictly increasing");
    if (output_every < 1) throw ConfigError("output_every must be >= 1");
    if (viscosity != "auto" && viscosity != "on" && viscosity != "off")
        throw ConfigError("viscosity must be auto, on or off");
    const bool linear = kind == ScenarioKind::DecayLinear || kind == ScenarioKind::FixedLinear;
    if (linear && epsilon != 0.0) throw ConfigError(kind_name(kind) + " requires epsilon = 0");
    const bool has_oracle = kind == ScenarioKind::WaveGeneration || kind == ScenarioKind::DecayLinear ||
                            kind == ScenarioKind::FixedLinear || kind == ScenarioKind::ControlledMotion;
    if (!self_reference && !has_oracle)
        throw ConfigError(kind_name(kind) + " has no exact solution; use reference = self:<N>");
    if (kind == ScenarioKind::WaveGeneration && !(zeta_max > 0.0 && epsilon > 0.0))
        throw ConfigError("wave_generation needs zeta_max > 0 and epsilon > 0");
    setup();
    for (int N : n_list) scheme_for_run().validate(grid(N).n_cells);
}

ScenarioSpec parse_scenario(std::istream& in) {
    ScenarioSpec s;
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, value).second) throw ConfigError("duplicate key: " + key);
    }
    if (!kv.count("scenario")) throw ConfigError("missing key: scenario");

    for (const auto& [key, v] : kv) {
        if (key == "scenario") s.kind = parse_kind(v);
        else if (key == "epsilon") s.epsilon = to_double(key, v);
        else if (key == "mu") s.mu = to_double(key, v);
        else if (key == "kappa") s.mu = 3.0 * std::pow(to_double(key, v), 2);
        else if (key == "ell") s.ell = to_double(key, v);
        else if (key == "L") s.L = to_double(key, v);
        else if (key == "h_eq") {
            const std::string prefix = "constant:";
            if (v.rfind(prefix, 0) != 0) throw ConfigError("h_eq must be given as constant:<value>");
            s.h0 = to_double(key, v.substr(prefix.size()));
        }
        else if (key == "N") s.n_list = to_int_list(key, v);
        else if (key == "n_convention") {
            if (v == "interior") s.mesh = MeshConvention::Interior;
            else if (v == "intervals") s.mesh = MeshConvention::Intervals;
            else throw ConfigError("n_convention must be interior or intervals");
        }
        else if (key == "dt_ratio") s.scheme.dt_over_dx = to_double(key, v);
        else if (key == "scheme") {
            if (v == "lf") s.scheme.order = SchemeOrder::LaxFriedrichs;
            else if (v == "mc") s.scheme.order = SchemeOrder::MacCormack;
            else throw ConfigError("scheme must be lf or mc");
        }
        else if (key == "T_final") s.t_final = to_double(key, v);
        else if (key == "viscosity") s.viscosity = v;
        else if (key == "viscosity_nu") s.scheme.viscosity_nu = to_double(key, v);
        else if (key == "viscosity_cells") s.scheme.viscosity_cells = to_int(key, v);
        else if (key == "delta0") s.delta0 = to_double(key, v);
        else if (key == "coupling") {
            if (v == "symmetric") s.symmetric_coupling = true;
            else if (v == "free") s.symmetric_coupling = false;
            else throw ConfigError("coupling must be symmetric or free");
        }
        else if (key == "zeta_max") s.zeta_max = to_double(key, v);
        else if (key == "x0") s.x0 = to_double(key, v);
        else if (key == "k") s.k = to_double(key, v);
        else if (key == "zeta_c_plus") s.zeta_c_plus = to_double(key, v);
        else if (key == "zeta_c_minus") s.zeta_c_minus = to_double(key, v);
        else if (key == "q_s_plus") s.q_s_plus = to_double(key, v);
        else if (key == "q_s_minus") s.q_s_minus = to_double(key, v);
        else if (key == "forced_amplitude") s.forced_amplitude = to_double(key, v);
        else if (key == "forced_omega") s.forced_omega = to_double(key, v);
        else if (key == "output_every") s.output_every = to_int(key, v);
        else if (key == "reference") {
            if (v == "oracle") s.self_reference = false;
            else if (v.rfind("self:", 0) == 0) {
                s.self_reference = true;
                s.n_ref = to_int(key, v.substr(5));
            } else throw ConfigError("reference must be oracle or self:<N>");
        }
        else throw ConfigError("unknown key: " + key);
    }
    s.validate();
    return s;
}

ScenarioSpec load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_scenario(in);
}

long step_count(const ScenarioSpec& spec, double dt) {
    return static_cast<long>(std::floor(spec.t_final / dt + 1e-9));
}

Solver make_solver(const ScenarioSpec& spec, int N) {
    const PhysicalSetup setup = spec.setup();
    const Grid grid = spec.grid(N);
    const SchemeConfig config = spec.scheme_for_run();

    InitialData data;
    ContactModel contact = FreeMotion{};
    FarBoundary far_plus, far_minus;

    switch (spec.kind) {
        case ScenarioKind::WaveGeneration: {
            auto prof = std::make_shared<SolitonProfile>(
                SolitonProfile::compute(spec.zeta_max, spec.epsilon, setup.kappa));
            const double c = prof->speed(), x0 = spec.x0, L = spec.L;
            data.zeta = [prof, x0](double x) { return (*prof)(x - x0); };
            data.q = [prof, x0, c](double x) { return c * (*prof)(x - x0); };
            data.single_line = true;
            contact = GeneratedDischarge{[prof, x0, c](double t) { return c * (*prof)(-x0 - c * t); }, {}};
            far_plus.discharge = [prof, x0, c, L](double t) { return c * (*prof)(L - x0 - c * t); };
            break;
        }
        case ScenarioKind::DecayLinear:
        case ScenarioKind::DecayNonlinear:
            data.delta = spec.delta0;
            if (spec.symmetric_coupling)
                contact = SymmetricMotion{};
            break;
        case ScenarioKind::FixedLinear: {
            const auto per = PeriodicSolutionSpec::make(spec.k, spec.zeta_c_plus, spec.zeta_c_minus,
                                                        spec.q_s_plus, spec.q_s_minus, setup);
            data.zeta = [per, setup](double x) { return fixed_object_exact(per, setup, 0.0, x).zeta; };
            data.q = [per, setup](double x) { return fixed_object_exact(per, setup, 0.0, x).q; };
            contact = PrescribedMotion{};
            const double L = spec.L;
            far_plus.discharge = [per, setup, L](double t) { return fixed_object_exact(per, setup, t, L).q; };
            far_minus.discharge = [per, setup, L](double t) { return fixed_object_exact(per, setup, t, -L).q; };
            break;
        }
        case ScenarioKind::FixedNonlinear:
        case ScenarioKind::FreeFloating: {
            auto prof = std::make_shared<SolitonProfile>(
                SolitonProfile::compute(spec.zeta_max, spec.epsilon, setup.kappa));
            const double c = prof->speed(), x0 = spec.x0;
            data.zeta = [prof, x0](double x) { return (*prof)(x - x0); };
            data.q = [prof, x0, c](double x) { return c * (*prof)(x - x0); };
            if (spec.kind == ScenarioKind::FixedNonlinear) contact = PrescribedMotion{};
            break;
        }
        case ScenarioKind::ControlledMotion: {
            const double jump = setup.ell * forced_motion(spec, 0.0).delta_dot;
            const double ell = setup.ell;
            data.q = [jump, ell](double x) {
                return x > 0.0 ? -jump * contact_bump(x - ell) : jump * contact_bump(x + ell);
            };
            data.delta = forced_motion(spec, 0.0).delta;
            const ScenarioSpec copy = spec;
            contact = FreeMotion{[copy, setup](double t, const Theta& th, double rp, double rm) {
                const ForcedTheta f{th.qi_avg, th.zu_plus_dot, th.zu_minus_dot, th.zu_plus, th.zu_minus};
                return control_force(f, rp, rm, forced_motion(copy, t), setup);
            }};
            break;
        }
    }
    const InitialState init = init_from_scenario(setup, grid, data);
    return Solver(setup, grid, config, std::move(contact), init.state, init.theta, std::move(far_plus),
                  std::move(far_minus));
}

RunResult run_scenario(const ScenarioSpec& spec, int N, const std::string& snapshot_dir) {
    const auto start = std::chrono::steady_clock::now();
    Solver solver = make_solver(spec, N);
    const long steps = step_count(spec, solver.dt());

    RunResult out;
    out.N = N;
    out.grid = solver.grid();
    out.series.reserve(static_cast<std::size_t>(steps) + 1);
    out.series.push_back(solver.diagnostics());
    try {
        for (long n = 0; n < steps; ++n) {
            solver.step();
            out.series.push_back(solver.diagnostics());
        }
    } catch (SolverAbort& err) {
        if (!snapshot_dir.empty()) write_snapshot(snapshot_dir, N, solver, err);
        throw;
    } catch (const PhysicalStateError& err) {
        SolverAbort abort(err.what(), solver.step_index());
        if (!snapshot_dir.empty()) write_snapshot(snapshot_dir, N, solver, abort);
        throw abort;
    }
    out.final_state = solver.state();
    out.final_theta = solver.theta();
    out.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace wsi
