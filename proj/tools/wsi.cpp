#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "wsi/convergence.hpp"
#include "wsi/csv.hpp"
#include "wsi/errors.hpp"
#include "wsi/properties.hpp"
#include "wsi/scenario.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kSpecError = 2, kSolverAbort = 3, kOracleInvalid = 4 };

wsi::ScenarioSpec load(const std::string& path, const std::string& scheme) {
    wsi::ScenarioSpec spec = wsi::load_scenario(path);
    if (scheme == "lf")
        spec.scheme.order = wsi::SchemeOrder::LaxFriedrichs;
    else if (scheme == "mc")
        spec.scheme.order = wsi::SchemeOrder::MacCormack;
    spec.validate();
    return spec;
}

int run_command(const std::string& config, const std::string& out, const std::string& scheme) {
    const wsi::ScenarioSpec spec = load(config, scheme);
    std::filesystem::create_directories(out);
    for (int N : spec.n_list) {
        const wsi::RunResult r = wsi::run_scenario(spec, N, out);
        const std::string tag = spec.n_list.size() > 1 ? "_N" + std::to_string(N) : "";
        wsi::write_diagnostics_csv(out + "/diagnostics" + tag + ".csv", r.series, spec.output_every);
        wsi::write_fields_csv(out + "/fields" + tag + ".csv", r.grid, r.final_state);
        std::printf("N=%d dx=%.6g steps=%zu runtime=%.3fs\n", N, r.grid.dx, r.series.size() - 1, r.runtime_s);
    }
    return kOk;
}

int converge_command(const std::string& config, const std::string& out, const std::string& scheme) {
    const wsi::ScenarioSpec spec = load(config, scheme);
    std::filesystem::create_directories(out);
    const wsi::ConvergenceReport rep = wsi::convergence_study(spec, out);
    wsi::write_report_csv(out + "/report.csv", rep);
    wsi::write_plot_script(out + "/plot_convergence.py");
    for (const auto& row : rep.rows) {
        std::printf("N=%-5d dx=%-10.4g", row.N, row.dx);
        for (std::size_t i = 0; i < row.errors.size(); ++i)
            std::printf("  err_%s=%.4e", rep.observables[i].c_str(), row.errors[i]);
        std::printf("  (%.2fs)\n", row.runtime_s);
    }
    for (std::size_t i = 0; i < rep.observables.size(); ++i) {
        const auto& f = rep.orders[i];
        if (f.defined)
            std::printf("order %s: %.3f (fit residual %.2e)\n", rep.observables[i].c_str(), f.slope, f.residual);
        else
            std::printf("order %s: undefined\n", rep.observables[i].c_str());
    }
    return kOk;
}

int seed_check(std::uint64_t seed) {
    const auto results = wsi::run_property_suite(seed);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        ok = ok && r.passed;
    }
    return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wave-structure interaction solver"};
    app.require_subcommand(0, 1);
    std::string scheme;
    std::optional<std::uint64_t> seed;
    app.add_option("--seed-check", seed, "Run the property suite with this seed")->expected(0, 1)
        ->default_str("1");

    std::string config, out = "out";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "Scenario file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out, "Output directory");
        sub->add_option("--scheme", scheme, "Override the scheme")->check(CLI::IsMember({"lf", "mc"}));
    };
    CLI::App* run = app.add_subcommand("run", "Simulate every N of a scenario and write CSVs");
    add_common(run);
    CLI::App* converge = app.add_subcommand("converge", "Convergence study against the reference");
    add_common(converge);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kSpecError;
    }

    try {
        if (app.count("--seed-check")) return seed_check(seed.value_or(1));
        if (*run) return run_command(config, out, scheme);
        if (*converge) return converge_command(config, out, scheme);
        std::cerr << app.help();
        return kSpecError;
    } catch (const wsi::ConfigError& e) {
        std::cerr << "spec error: " << e.what() << '\n';
        return kSpecError;
    } catch (const wsi::SolverAbort& e) {
        std::cerr << "solver abort at step " << e.step() << ": " << e.what();
        if (!e.snapshot_path().empty()) std::cerr << " (snapshot: " << e.snapshot_path() << ')';
        std::cerr << '\n';
        return kSolverAbort;
    } catch (const wsi::PhysicalStateError& e) {
        std::cerr << "solver abort: " << e.what() << '\n';
        return kSolverAbort;
    } catch (const wsi::OracleError& e) {
        std::cerr << "oracle invalid: " << e.what() << '\n';
        return kOracleInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}
