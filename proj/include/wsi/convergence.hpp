#pragma once
#include <string>
#include <vector>

#include "wsi/scenario.hpp"

namespace wsi {

struct OrderFit {
    double slope = 0.0;
    double residual = 0.0;  // RMS deviation of log(err) from the fitted line
    bool defined = false;   // false when an error is zero or fewer than two meshes
};

// Least-squares slope of log(err) against log(dx).
OrderFit fit_order(const std::vector<double>& dx, const std::vector<double>& err);

struct ConvergenceRow {
    int N = 0;
    double dx = 0.0;
    std::vector<double> errors;  // one per observable
    double runtime_s = 0.0;
};

struct ConvergenceReport {
    std::vector<std::string> observables;
    std::vector<ConvergenceRow> rows;
    std::vector<OrderFit> orders;
    double reference_runtime_s = 0.0;

    const OrderFit& order(const std::string& observable) const;
};

// Runs every mesh of the scenario (in parallel) and compares against the exact
// solution or the refined reference run.
ConvergenceReport convergence_study(const ScenarioSpec& spec, const std::string& snapshot_dir = {});

// Index ratio between a coarse mesh and the reference mesh. Throws ConfigError
// when the coarse nodes are not a subset of the reference nodes.
int coincidence_ratio(const ScenarioSpec& spec, int N, int n_ref);

// Largest difference over coarse points. Sample i of each vector is point i + first,
// and coarse point k is matched to reference point k*ratio.
double restricted_error(const std::vector<double>& coarse, const std::vector<double>& fine,
                        const std::vector<double>& x_coarse, const std::vector<double>& x_fine,
                        int ratio, int first = 0);

void write_report_csv(const std::string& path, const ConvergenceReport& report);
// Writes a small matplotlib script that plots report.csv.
void write_plot_script(const std::string& path);

}  // namespace wsi
