#include "hcn/quadrature.hpp"

#include "hcn/errors.hpp"

namespace hcn {

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n)
        throw DegenerateGridError("least squares slope needs >= 2 paired points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = double(n) * sxx - sx * sx;
    if (det == 0) throw DegenerateGridError("least squares slope: zero x-variance");
    return (double(n) * sxy - sx * sy) / det;
}

} // namespace hcn
