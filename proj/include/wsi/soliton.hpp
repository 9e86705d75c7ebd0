#pragma once
#include <utility>
#include <vector>

namespace wsi {

// c^2 of the solitary wave with crest amplitude zeta_max.
double soliton_speed_squared(double zeta_max, double epsilon);

// Even solitary-wave profile zeta_c, integrated outward from the crest.
class SolitonProfile {
public:
    static SolitonProfile compute(double zeta_max, double epsilon, double kappa, double step = 1e-3);

    double zeta_max() const { return zeta_max_; }
    double speed() const { return speed_; }
    double speed_squared() const { return speed_ * speed_; }
    double epsilon() const { return epsilon_; }
    double kappa() const { return kappa_; }
    double step() const { return step_; }

    double operator()(double x) const;
    double derivative(double x) const;

    // Integration nodes x_j = j*step (x >= 0) with values and slopes.
    const std::vector<double>& node_values() const { return zeta_; }
    const std::vector<double>& node_slopes() const { return slope_; }

    // (x, zeta) on [-x_range, x_range] with the given spacing.
    std::vector<std::pair<double, double>> samples(double x_range, double dx_sample) const;

private:
    double zeta_max_ = 0.0, epsilon_ = 0.0, kappa_ = 0.0, speed_ = 0.0, step_ = 0.0;
    std::vector<double> zeta_, slope_;
};

SolitonProfile soliton_profile(double zeta_max, double epsilon, double kappa, double step = 1e-3);

}  // namespace wsi
