#include <cmath>
#include <vector>

#include "doctest.h"
#include "wsi/errors.hpp"
#include "wsi/grid.hpp"
#include "wsi/scenario.hpp"
#include "wsi/soliton.hpp"
#include "wsi/stepper.hpp"

using namespace wsi;

namespace {

Solver rest_solver(SchemeOrder order, ContactModel contact) {
    const auto setup = PhysicalSetup::make(0.3, std::sqrt(0.1), 4.0, DepthProfile::constant(0.7));
    const Grid g = build_grid(30.0, 4.0, 100);
    SchemeConfig cfg;
    cfg.order = order;
    cfg.viscosity = true;
    State st;
    st.plus = HalfLine(g.nodes());
    st.minus = HalfLine(g.nodes());
    return Solver(setup, g, cfg, std::move(contact), st, Theta{});
}

// Largest interior error after a short run of a solitary wave far from both ends.
double soliton_error(SchemeOrder order, int N) {
    ScenarioSpec spec;
    spec.kind = ScenarioKind::WaveGeneration;
    spec.epsilon = 0.3;
    spec.mu = 0.3;
    spec.L = 24.0;
    spec.zeta_max = 1.0;
    spec.x0 = 12.0;
    spec.t_final = 0.5;
    spec.scheme.order = order;
    spec.scheme.dt_over_dx = 0.8;
    spec.n_list = {N};
    const auto run = run_scenario(spec, N);
    const auto prof = soliton_profile(1.0, 0.3, std::sqrt(0.1));
    const double t = run.series.back().t;
    double worst = 0.0;
    for (int k = 1; k <= run.grid.n_cells; ++k) {
        const double x = run.grid.x_right(k);
        const double z = prof(x - spec.x0 - prof.speed() * t);
        worst = std::max(worst, std::abs(run.final_state.plus.zeta[k] - z));
        worst = std::max(worst, std::abs(run.final_state.plus.q[k] - prof.speed() * z));
    }
    return worst;
}

}  // namespace

TEST_CASE("rest is a fixed point of both schemes") {
    for (auto order : {SchemeOrder::LaxFriedrichs, SchemeOrder::MacCormack}) {
        for (int model = 0; model < 3; ++model) {
            ContactModel contact = FreeMotion{};
            if (model == 1) contact = SymmetricMotion{};
            if (model == 2) contact = PrescribedMotion{};
            Solver s = rest_solver(order, contact);
            for (int n = 0; n < 50; ++n) s.step();
            for (const HalfLine* u : {&s.state().plus, &s.state().minus}) {
                for (double v : u->zeta) CHECK(v == 0.0);
                for (double v : u->q) CHECK(v == 0.0);
            }
            for (double v : s.theta().to_array()) CHECK(v == 0.0);
            CHECK(s.step_index() == 50);
            CHECK(s.time() == doctest::Approx(50 * s.dt()));
        }
    }
}

TEST_CASE("scheme configuration is validated") {
    SchemeConfig cfg;
    cfg.dt_over_dx = 1.5;
    CHECK_THROWS_AS(cfg.validate(100), ConfigError);
    cfg.dt_over_dx = 0.9;
    cfg.viscosity_cells = 100;
    CHECK_THROWS_AS(cfg.validate(100), ConfigError);
    cfg.viscosity_cells = 4;
    cfg.viscosity_nu = -1.0;
    CHECK_THROWS_AS(cfg.validate(100), ConfigError);
    cfg.viscosity_nu = 2.0;
    CHECK_NOTHROW(cfg.validate(100));
}

TEST_CASE("solver rejects a state that does not match the grid") {
    const auto setup = PhysicalSetup::make(0.0, std::sqrt(0.1), 4.0, DepthProfile::constant(0.7));
    const Grid g = build_grid(30.0, 4.0, 100);
    State st;
    st.plus = HalfLine(50);
    st.minus = HalfLine(50);
    CHECK_THROWS_AS(Solver(setup, g, SchemeConfig{}, FreeMotion{}, st, Theta{}), ConfigError);
}

TEST_CASE("grounding the object aborts the run") {
    ScenarioSpec spec;
    spec.kind = ScenarioKind::DecayNonlinear;
    spec.epsilon = 0.3;
    spec.delta0 = -2.5;  // h_eq + eps*delta < 0
    spec.self_reference = true;
    spec.n_list = {100};
    spec.t_final = 1.0;
    CHECK_THROWS_AS(run_scenario(spec, 100), SolverAbort);
}

TEST_CASE("linear release keeps mirror symmetry") {
    ScenarioSpec spec;
    spec.kind = ScenarioKind::DecayLinear;
    spec.delta0 = 0.1;
    spec.symmetric_coupling = false;
    spec.n_list = {100};
    spec.t_final = 3.0;
    const auto run = run_scenario(spec, 100);
    for (const auto& d : run.series) {
        CHECK(std::abs(d.qi_avg) < 1e-12);
        CHECK(std::abs(d.zu_plus - d.zu_minus) < 1e-12);
    }
    for (int k = 0; k < run.grid.nodes(); ++k) {
        CHECK(std::abs(run.final_state.plus.zeta[k] - run.final_state.minus.zeta[k]) < 1e-12);
        CHECK(std::abs(run.final_state.plus.q[k] + run.final_state.minus.q[k]) < 1e-12);
    }
}

TEST_CASE("symmetric and free coupling agree on symmetric data") {
    ScenarioSpec spec;
    spec.kind = ScenarioKind::DecayNonlinear;
    spec.epsilon = 0.3;
    spec.delta0 = 0.2;
    spec.self_reference = true;
    spec.n_list = {100};
    spec.t_final = 3.0;
    const auto sym = run_scenario(spec, 100);
    spec.symmetric_coupling = false;
    const auto free = run_scenario(spec, 100);
    REQUIRE(sym.series.size() == free.series.size());
    for (std::size_t i = 0; i < sym.series.size(); ++i)
        CHECK(std::abs(sym.series[i].delta - free.series[i].delta) < 1e-11);
}

TEST_CASE("solitary wave is transported at the scheme order") {
    const double lf = soliton_error(SchemeOrder::LaxFriedrichs, 800) / soliton_error(SchemeOrder::LaxFriedrichs, 1600);
    const double mc = soliton_error(SchemeOrder::MacCormack, 800) / soliton_error(SchemeOrder::MacCormack, 1600);
    CHECK(std::log2(lf) > 0.8);
    CHECK(std::log2(mc) > 1.7);
}

TEST_CASE("diagnostics report the initial state") {
    ScenarioSpec spec;
    spec.kind = ScenarioKind::DecayLinear;
    spec.delta0 = 0.1;
    spec.n_list = {60};
    spec.t_final = 0.0;
    const auto run = run_scenario(spec, 60);
    REQUIRE(run.series.size() == 1);
    CHECK(run.series[0].t == 0.0);
    CHECK(run.series[0].delta == 0.1);
    CHECK(run.series[0].volume == doctest::Approx(2.0 * 4.0 * 0.1));
}
