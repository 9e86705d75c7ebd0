#include "wsi/quadrature.hpp"

#include <stdexcept>

namespace wsi {

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson: need an odd point count >= 3");
    const double h = (b - a) / (n - 1);
    double sum = f(a) + f(b);
    for (int i = 1; i < n - 1; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

}  // namespace wsi
