#pragma once
#include <functional>

namespace wsi {

// Composite Simpson rule on [a, b] with n points (n odd, n >= 3).
double simpson(const std::function<double(double)>& f, double a, double b, int n = 401);

}  // namespace wsi
