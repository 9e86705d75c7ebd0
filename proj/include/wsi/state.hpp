#pragma once
#include <array>
#include <vector>

namespace wsi {

struct HalfLine {
    std::vector<double> zeta;
    std::vector<double> q;  // physical discharge, sign not flipped on the left

    HalfLine() = default;
    explicit HalfLine(int nodes) : zeta(nodes, 0.0), q(nodes, 0.0) {}
    int nodes() const { return static_cast<int>(zeta.size()); }
};

struct State {
    HalfLine plus;
    HalfLine minus;  // empty for single half-line runs
    bool has_minus() const { return minus.nodes() > 0; }
};

struct Theta {
    double qi_avg = 0.0;
    double delta_dot = 0.0;
    double zu_plus_dot = 0.0;
    double zu_minus_dot = 0.0;
    double delta = 0.0;
    double zu_plus = 0.0;
    double zu_minus = 0.0;

    std::array<double, 7> to_array() const {
        return {qi_avg, delta_dot, zu_plus_dot, zu_minus_dot, delta, zu_plus, zu_minus};
    }
    static Theta from_array(const std::array<double, 7>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
    }
};

// Prescribed vertical motion at one instant.
struct MotionSample {
    double delta = 0.0;
    double delta_dot = 0.0;
    double delta_ddot = 0.0;
};

// Reduced unknowns when the motion is prescribed.
struct ForcedTheta {
    double qi_avg = 0.0;
    double zu_plus_dot = 0.0;
    double zu_minus_dot = 0.0;
    double zu_plus = 0.0;
    double zu_minus = 0.0;

    std::array<double, 5> to_array() const {
        return {qi_avg, zu_plus_dot, zu_minus_dot, zu_plus, zu_minus};
    }
    static ForcedTheta from_array(const std::array<double, 5>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }
};

// Reduced unknowns for mirror-symmetric configurations.
struct SymmetricTheta {
    double delta_dot = 0.0;
    double zu_plus_dot = 0.0;
    double delta = 0.0;
    double zu_plus = 0.0;

    std::array<double, 4> to_array() const { return {delta_dot, zu_plus_dot, delta, zu_plus}; }
    static SymmetricTheta from_array(const std::array<double, 4>& a) {
        return {a[0], a[1], a[2], a[3]};
    }
};

}  // namespace wsi
