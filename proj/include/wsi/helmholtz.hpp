#pragma once
#include <span>
#include <vector>

namespace wsi {

// Discrete inverse of (1 - kappa^2 d_xx) on one half-line with homogeneous
// Neumann rows at both ends. Factored once; solves are const and reentrant.
class HelmholtzWorkspace {
public:
    HelmholtzWorkspace() = default;
    HelmholtzWorkspace(double kappa, double dx, int n);

    int size() const { return n_; }
    double kappa() const { return kappa_; }
    double dx() const { return dx_; }

    void solve(std::span<const double> f, std::span<double> v) const;
    std::vector<double> solve(std::span<const double> f) const;

    // Forward operator with exactly the stencil of the solve.
    void apply(std::span<const double> v, std::span<double> f) const;
    std::vector<double> apply(std::span<const double> v) const;

    // Coefficients (lower, diag, upper) of row i, for dense cross-checks.
    void row(int i, double& lower, double& diag, double& upper) const;

private:
    double kappa_ = 0.0;
    double dx_ = 0.0;
    int n_ = 0;
    double r_ = 0.0;  // kappa^2 / dx^2
    std::vector<double> upper_mod_;
    std::vector<double> inv_pivot_;
};

// Second-order one-sided value at the contact point: (4/3) v1 - (1/3) v2.
double trace_r1(std::span<const double> v);

}  // namespace wsi
