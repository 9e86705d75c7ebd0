#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "doctest.h"
#include "wsi/convergence.hpp"
#include "wsi/csv.hpp"
#include "wsi/errors.hpp"
#include "wsi/scenario.hpp"

using namespace wsi;
namespace fs = std::filesystem;

namespace {

ScenarioSpec parse(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

const char* kDecay =
    "# linear release\n"
    "scenario = decay_linear\n"
    "epsilon = 0\n"
    "mu = 0.3\n"
    "ell = 4\n"
    "L = 30\n"
    "h_eq = constant:0.7\n"
    "N = 60, 80, 120\n"
    "dt_ratio = 0.9\n"
    "scheme = mc\n"
    "T_final = 2\n";

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("wsi_unit_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("config parsing") {
    const auto s = parse(kDecay);
    CHECK(s.kind == ScenarioKind::DecayLinear);
    CHECK(s.h0 == 0.7);
    CHECK(s.n_list == std::vector<int>{60, 80, 120});
    CHECK(s.scheme.order == SchemeOrder::MacCormack);
    CHECK(s.scheme.dt_over_dx == 0.9);
    CHECK(s.t_final == 2.0);
    CHECK(s.observables() == std::vector<std::string>{"delta"});

    const auto self = parse(std::string(kDecay) + "reference = self:2400\nn_convention = intervals\n");
    CHECK(self.self_reference);
    CHECK(self.n_ref == 2400);
    CHECK(self.grid(120).dx == doctest::Approx(26.0 / 120.0));
    CHECK(s.grid(120).dx == doctest::Approx(26.0 / 121.0));
}

TEST_CASE("config errors") {
    const std::string base = kDecay;
    CHECK_THROWS_AS(parse(base + "bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse(base + "mu = 0.1\n"), ConfigError);
    CHECK_THROWS_AS(parse(base + "delta0 = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse(base + "delta0 = 0.1x\n"), ConfigError);
    CHECK_THROWS_AS(parse(base + "scheme_extra\n"), ConfigError);
    CHECK_THROWS_AS(parse("epsilon = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse("scenario = sloshing\n"), ConfigError);
    CHECK_THROWS_AS(parse("scenario = decay_linear\nN = 80, 60\n"), ConfigError);
    CHECK_THROWS_AS(parse("scenario = decay_linear\nN = 60\nepsilon = 0.3\n"), ConfigError);
    CHECK_THROWS_AS(parse("scenario = decay_nonlinear\nepsilon = 0.3\nN = 60\n"), ConfigError);
    CHECK_THROWS_AS(parse("scenario = decay_linear\nN = 60\nh_eq = 0.7\n"), ConfigError);
    CHECK_THROWS_AS(parse("scenario = decay_linear\nN = 60\nviscosity = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse("scenario = decay_linear\nN = 60\ndt_ratio = 1.2\n"), ConfigError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/config.cfg"), ConfigError);
}

TEST_CASE("reference mesh coincidence") {
    auto s = parse(kDecay);
    CHECK(coincidence_ratio(s, 199, 2399) == 12);
    CHECK_THROWS_AS(coincidence_ratio(s, 200, 2399), ConfigError);
    s.mesh = MeshConvention::Intervals;
    CHECK(coincidence_ratio(s, 120, 2400) == 20);
    CHECK(coincidence_ratio(s, 160, 2400) == 15);
    CHECK_THROWS_AS(coincidence_ratio(s, 130, 2400), ConfigError);
    CHECK_THROWS_AS(coincidence_ratio(s, 4800, 2400), ConfigError);
}

TEST_CASE("restriction onto the coarse mesh") {
    const std::vector<double> xf{0.0, 0.5, 1.0, 1.5, 2.0};
    const std::vector<double> ff{1.0, 9.0, 2.0, 9.0, 4.0};
    const std::vector<double> xc{0.0, 1.0, 2.0};
    const std::vector<double> fc{1.5, 2.0, 3.0};
    CHECK(restricted_error(fc, ff, xc, xf, 2) == 1.0);
    const std::vector<double> shifted{0.0, 1.1, 2.0};
    CHECK_THROWS_AS(restricted_error(fc, ff, shifted, xf, 2), ConfigError);
    CHECK_THROWS_AS(restricted_error(fc, ff, xc, xf, 3), ConfigError);

    // samples start at point 1: coarse point k+1 sits at fine point (k+1)*ratio
    const std::vector<double> xf1{0.5, 1.0, 1.5, 2.0};
    const std::vector<double> ff1{9.0, 2.0, 9.0, 4.0};
    const std::vector<double> xc1{1.0, 2.0};
    const std::vector<double> fc1{2.5, 4.0};
    CHECK(restricted_error(fc1, ff1, xc1, xf1, 2, 1) == 0.5);
}

TEST_CASE("order fit") {
    const std::vector<double> dx{0.4, 0.2, 0.1, 0.05};
    std::vector<double> err;
    for (double h : dx) err.push_back(3.0 * h * h);
    const auto fit = fit_order(dx, err);
    CHECK(fit.defined);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);

    err[1] *= 1.5;
    CHECK(fit_order(dx, err).residual > 0.05);

    err[2] = 0.0;
    CHECK_FALSE(fit_order(dx, err).defined);
    CHECK_FALSE(fit_order({0.1}, {0.01}).defined);
}

TEST_CASE("double formatting round trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 12345.678901234567})
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("zero final time gives zero error") {
    auto s = parse(kDecay);
    s.t_final = 0.0;
    const auto report = convergence_study(s);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) CHECK(row.errors[0] == 0.0);
    CHECK_FALSE(report.order("delta").defined);
}

TEST_CASE("convergence study needs three meshes") {
    auto s = parse(kDecay);
    s.n_list = {60, 80};
    CHECK_THROWS_AS(convergence_study(s), ConfigError);
}

TEST_CASE("runs are deterministic to the byte") {
    const auto s = parse(kDecay);
    const auto dir = scratch_dir("determinism");
    for (int rep = 0; rep < 2; ++rep) {
        const auto run = run_scenario(s, 80);
        write_diagnostics_csv((dir / ("diag" + std::to_string(rep) + ".csv")).string(), run.series, 3);
        write_fields_csv((dir / ("fields" + std::to_string(rep) + ".csv")).string(), run.grid, run.final_state);
    }
    const auto d0 = slurp(dir / "diag0.csv");
    CHECK(d0.rfind("t,delta,delta_dot,qi_avg,zu_plus,zu_minus,volume\n", 0) == 0);
    CHECK(d0 == slurp(dir / "diag1.csv"));
    CHECK(slurp(dir / "fields0.csv") == slurp(dir / "fields1.csv"));
    fs::remove_all(dir);
}

TEST_CASE("report and plot script are written") {
    auto s = parse(kDecay);
    s.t_final = 1.0;
    const auto report = convergence_study(s);
    const auto dir = scratch_dir("report");
    write_report_csv((dir / "report.csv").string(), report);
    write_plot_script((dir / "plot.py").string());
    const auto text = slurp(dir / "report.csv");
    CHECK(text.rfind("N,dx,err_delta,order_delta,fit_residual_delta,runtime_s\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(slurp(dir / "plot.py").find("report.csv") != std::string::npos);
    fs::remove_all(dir);
}
