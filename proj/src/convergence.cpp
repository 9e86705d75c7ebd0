#include "wsi/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <span>

#include "wsi/csv.hpp"
#include "wsi/errors.hpp"
#include "wsi/laplace.hpp"
#include "wsi/periodic.hpp"
#include "wsi/soliton.hpp"

namespace wsi {

namespace {

double series_value(const Diagnostics& d, const std::string& name) {
    if (name == "delta") return d.delta;
    if (name == "qi_avg") return d.qi_avg;
    if (name == "zu_plus") return d.zu_plus;
    if (name == "zu_minus") return d.zu_minus;
    throw ConfigError("unknown series observable: " + name);
}

bool is_field(const std::string& name) { return name == "zeta" || name == "q"; }

// Field values at the cell centers (boundary nodes excluded) of the right
// half-line, then the left one; coordinates alongside.
void field_samples(const RunResult& run, const std::string& name, std::vector<double>& v,
                   std::vector<double>& x) {
    v.clear();
    x.clear();
    const auto add = [&](const HalfLine& u, bool right) {
        for (int k = 1; k <= run.grid.n_cells; ++k) {
            v.push_back(name == "zeta" ? u.zeta[k] : u.q[k]);
            x.push_back(right ? run.grid.x_right(k) : run.grid.x_left(k));
        }
    };
    add(run.final_state.plus, true);
    if (run.final_state.has_minus()) add(run.final_state.minus, false);
}

std::vector<double> exact_series(const ScenarioSpec& spec, const std::vector<Diagnostics>& series,
                                 const std::string& name) {
    const PhysicalSetup setup = spec.setup();
    std::vector<double> t(series.size()), out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) t[i] = series[i].t;
    switch (spec.kind) {
        case ScenarioKind::DecayLinear:
            return linear_decay_exact(t, spec.delta0, setup);
        case ScenarioKind::FixedLinear: {
            const auto per = PeriodicSolutionSpec::make(spec.k, spec.zeta_c_plus, spec.zeta_c_minus,
                                                        spec.q_s_plus, spec.q_s_minus, setup);
            for (std::size_t i = 0; i < t.size(); ++i)
                out[i] = fixed_object_exact(per, setup, t[i], setup.ell).qi_avg;
            return out;
        }
        case ScenarioKind::ControlledMotion:
            for (std::size_t i = 0; i < t.size(); ++i)
                out[i] = spec.forced_amplitude * std::sin(spec.forced_omega * t[i]);
            return out;
        default:
            throw ConfigError("no exact series for " + kind_name(spec.kind) + " / " + name);
    }
}

std::vector<double> exact_field(const ScenarioSpec& spec, const RunResult& run, const std::string& name,
                                const std::vector<double>& x) {
    if (spec.kind != ScenarioKind::WaveGeneration)
        throw ConfigError("no exact field for " + kind_name(spec.kind));
    const PhysicalSetup setup = spec.setup();
    const SolitonProfile prof = SolitonProfile::compute(spec.zeta_max, spec.epsilon, setup.kappa);
    const double t = run.series.back().t;
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double z = prof(x[i] - spec.x0 - prof.speed() * t);
        out[i] = name == "zeta" ? z : prof.speed() * z;
    }
    return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

OrderFit fit_order(const std::vector<double>& dx, const std::vector<double>& err) {
    OrderFit fit;
    const std::size_t n = dx.size();
    if (n < 2 || err.size() != n) return fit;
    for (double e : err)
        if (!(e > 0.0) || !std::isfinite(e)) {
            fit.slope = std::numeric_limits<double>::quiet_NaN();
            fit.residual = std::numeric_limits<double>::quiet_NaN();
            return fit;
        }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(dx[i]);
        my += std::log(err[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::log(dx[i]) - mx;
        sxy += a * (std::log(err[i]) - my);
        sxx += a * a;
    }
    if (!(sxx > 0.0)) return fit;
    fit.slope = sxy / sxx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = my + fit.slope * (std::log(dx[i]) - mx);
        ss += std::pow(std::log(err[i]) - pred, 2);
    }
    fit.residual = std::sqrt(ss / n);
    fit.defined = true;
    return fit;
}

const OrderFit& ConvergenceReport::order(const std::string& observable) const {
    for (std::size_t i = 0; i < observables.size(); ++i)
        if (observables[i] == observable) return orders[i];
    throw std::out_of_range("no observable " + observable);
}

int coincidence_ratio(const ScenarioSpec& spec, int N, int n_ref) {
    // both conventions reduce to counting intervals of the half-line
    const int offset = (spec.mesh == MeshConvention::Interior && spec.kind != ScenarioKind::WaveGeneration) ? 1 : 0;
    const int coarse = N + offset, fine = n_ref + offset;
    if (fine <= coarse || fine % coarse != 0)
        throw ConfigError("reference mesh N=" + std::to_string(n_ref) + " does not contain the nodes of N=" +
                          std::to_string(N));
    return fine / coarse;
}

double restricted_error(const std::vector<double>& coarse, const std::vector<double>& fine,
                        const std::vector<double>& x_coarse, const std::vector<double>& x_fine, int ratio,
                        int first) {
    double m = 0.0;
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        const std::size_t j = (k + first) * static_cast<std::size_t>(ratio) - first;
        if (j >= fine.size()) throw ConfigError("restriction runs past the reference samples");
        if (std::abs(x_coarse[k] - x_fine[j]) > 1e-12 * std::max(1.0, std::abs(x_coarse[k])))
            throw ConfigError("coarse and reference points do not coincide");
        m = std::max(m, std::abs(coarse[k] - fine[j]));
    }
    return m;
}

ConvergenceReport convergence_study(const ScenarioSpec& spec, const std::string& snapshot_dir) {
    spec.validate();
    if (spec.n_list.size() < 3) throw ConfigError("a convergence study needs at least 3 mesh sizes");
    ConvergenceReport report;
    report.observables = spec.observables();
    const auto& names = report.observables;

    // Separate half-lines of the same run are stored one after another, so the
    // per-half-line restriction needs the node count of each run.
    std::vector<int> ratios;
    if (spec.self_reference)
        for (int N : spec.n_list) ratios.push_back(coincidence_ratio(spec, N, spec.n_ref));

    std::vector<std::future<RunResult>> jobs;
    for (int N : spec.n_list)
        jobs.push_back(std::async(std::launch::async, [&spec, N, &snapshot_dir] {
            return run_scenario(spec, N, snapshot_dir);
        }));
    std::future<RunResult> ref_job;
    if (spec.self_reference)
        ref_job = std::async(std::launch::async, [&spec, &snapshot_dir] {
            return run_scenario(spec, spec.n_ref, snapshot_dir);
        });

    std::vector<RunResult> runs;
    for (auto& j : jobs) runs.push_back(j.get());
    RunResult ref;
    if (spec.self_reference) {
        ref = ref_job.get();
        report.reference_runtime_s = ref.runtime_s;
    }

    for (std::size_t r = 0; r < runs.size(); ++r) {
        const RunResult& run = runs[r];
        ConvergenceRow row;
        row.N = run.N;
        row.dx = run.grid.dx;
        row.runtime_s = run.runtime_s;
        for (const std::string& name : names) {
            double err = 0.0;
            if (is_field(name)) {
                std::vector<double> v, x;
                field_samples(run, name, v, x);
                if (spec.self_reference) {
                    std::vector<double> vf, xf;
                    field_samples(ref, name, vf, xf);
                    const int np = run.grid.n_cells, nf = ref.grid.n_cells;
                    const auto part = [](const std::vector<double>& a, int off, int n) {
                        return std::vector<double>(a.begin() + off, a.begin() + off + n);
                    };
                    err = restricted_error(part(v, 0, np), part(vf, 0, nf), part(x, 0, np), part(xf, 0, nf),
                                           ratios[r], 1);
                    if (run.final_state.has_minus())
                        err = std::max(err, restricted_error(part(v, np, np), part(vf, nf, nf), part(x, np, np),
                                                             part(xf, nf, nf), ratios[r], 1));
                } else {
                    err = max_abs_diff(v, exact_field(spec, run, name, x));
                }
            } else {
                std::vector<double> v(run.series.size()), t(run.series.size());
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v[i] = series_value(run.series[i], name);
                    t[i] = run.series[i].t;
                }
                if (spec.self_reference) {
                    std::vector<double> vf(ref.series.size()), tf(ref.series.size());
                    for (std::size_t i = 0; i < vf.size(); ++i) {
                        vf[i] = series_value(ref.series[i], name);
                        tf[i] = ref.series[i].t;
                    }
                    err = restricted_error(v, vf, t, tf, ratios[r]);
                } else {
                    err = max_abs_diff(v, exact_series(spec, run.series, name));
                }
            }
            row.errors.push_back(err);
        }
        report.rows.push_back(row);
    }

    for (std::size_t o = 0; o < names.size(); ++o) {
        std::vector<double> dx, err;
        for (const auto& row : report.rows) {
            dx.push_back(row.dx);
            err.push_back(row.errors[o]);
        }
        report.orders.push_back(fit_order(dx, err));
    }
    return report;
}

void write_report_csv(const std::string& path, const ConvergenceReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << "N,dx";
    for (const auto& n : report.observables) out << ",err_" << n;
    for (const auto& n : report.observables) out << ",order_" << n << ",fit_residual_" << n;
    out << ",runtime_s\n";
    const auto fmt = [](const OrderFit& f, double v) {
        return f.defined ? format_double(v) : std::string("undefined");
    };
    for (const auto& row : report.rows) {
        out << row.N << ',' << format_double(row.dx);
        for (double e : row.errors) out << ',' << format_double(e);
        for (const auto& f : report.orders) out << ',' << fmt(f, f.slope) << ',' << fmt(f, f.residual);
        out << ',' << format_double(row.runtime_s) << '\n';
    }
}

void write_plot_script(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << R"PY(#!/usr/bin/env python3
# Log-log error plot for report.csv in the same directory.
import csv
import os
import sys

import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "report.csv")) as fh:
    rows = list(csv.DictReader(fh))
dx = [float(r["dx"]) for r in rows]
for key in rows[0]:
    if not key.startswith("err_"):
        continue
    name = key[4:]
    err = [float(r[key]) for r in rows]
    plt.loglog(dx, err, "o-", label=f"{name} (order {rows[0]['order_' + name]})")
plt.xlabel("dx")
plt.ylabel("max error")
plt.legend()
plt.grid(True, which="both", ls=":")
target = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "convergence.png")
plt.savefig(target, dpi=120)
)PY";
}

}  // namespace wsi
