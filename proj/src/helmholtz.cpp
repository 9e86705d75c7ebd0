#include "wsi/helmholtz.hpp"

#include <stdexcept>
#include <string>

namespace wsi {

namespace {
void require_size(std::size_t got, int want, const char* what) {
    if (static_cast<int>(got) != want)
        throw std::invalid_argument(std::string("helmholtz: size mismatch in ") + what);
}
}  // namespace

HelmholtzWorkspace::HelmholtzWorkspace(double kappa, double dx, int n)
    : kappa_(kappa), dx_(dx), n_(n), r_(kappa * kappa / (dx * dx)) {
    if (n < 2) throw std::invalid_argument("helmholtz: need at least 2 cells");
    if (!(kappa > 0.0) || !(dx > 0.0)) throw std::invalid_argument("helmholtz: kappa, dx must be > 0");
    upper_mod_.resize(n);
    inv_pivot_.resize(n);
    double lo, d, up;
    row(0, lo, d, up);
    inv_pivot_[0] = 1.0 / d;
    upper_mod_[0] = up * inv_pivot_[0];
    for (int i = 1; i < n; ++i) {
        row(i, lo, d, up);
        inv_pivot_[i] = 1.0 / (d - lo * upper_mod_[i - 1]);
        upper_mod_[i] = up * inv_pivot_[i];
    }
}

void HelmholtzWorkspace::row(int i, double& lower, double& diag, double& upper) const {
    const double edge = 2.0 / 3.0 * r_;
    if (i == 0) {
        lower = 0.0;
        diag = 1.0 + edge;
        upper = -edge;
    } else if (i == n_ - 1) {
        // far end mirrors the contact-side Neumann row
        lower = -edge;
        diag = 1.0 + edge;
        upper = 0.0;
    } else {
        lower = -r_;
        diag = 1.0 + 2.0 * r_;
        upper = -r_;
    }
}

void HelmholtzWorkspace::solve(std::span<const double> f, std::span<double> v) const {
    require_size(f.size(), n_, "solve (rhs)");
    require_size(v.size(), n_, "solve (output)");
    const double edge = 2.0 / 3.0 * r_;
    v[0] = f[0] * inv_pivot_[0];
    for (int i = 1; i < n_; ++i) {
        const double lo = (i == n_ - 1) ? -edge : -r_;
        v[i] = (f[i] - lo * v[i - 1]) * inv_pivot_[i];
    }
    for (int i = n_ - 2; i >= 0; --i) v[i] -= upper_mod_[i] * v[i + 1];
}

std::vector<double> HelmholtzWorkspace::solve(std::span<const double> f) const {
    std::vector<double> v(f.size());
    solve(f, v);
    return v;
}

void HelmholtzWorkspace::apply(std::span<const double> v, std::span<double> f) const {
    require_size(v.size(), n_, "apply (input)");
    require_size(f.size(), n_, "apply (output)");
    double lo, d, up;
    for (int i = 0; i < n_; ++i) {
        row(i, lo, d, up);
        double acc = d * v[i];
        if (i > 0) acc += lo * v[i - 1];
        if (i < n_ - 1) acc += up * v[i + 1];
        f[i] = acc;
    }
}

std::vector<double> HelmholtzWorkspace::apply(std::span<const double> v) const {
    std::vector<double> f(v.size());
    apply(v, f);
    return f;
}

double trace_r1(std::span<const double> v) {
    if (v.size() < 2) throw std::invalid_argument("trace_r1: need at least 2 cells");
    return 4.0 / 3.0 * v[0] - 1.0 / 3.0 * v[1];
}

}  // namespace wsi
