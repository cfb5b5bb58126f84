#include "hcn/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hcn/arith.hpp"
#include "hcn/errors.hpp"
#include "hcn/quadrature.hpp"

namespace hcn {

namespace {

constexpr double kZeta3 = 1.2020569031595942853997; // Apery's constant

Rational int128_to_rational(unsigned __int128 v, std::int64_t den) {
    const std::uint64_t lo = static_cast<std::uint64_t>(v);
    const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
    BigInt n = BigInt(hi);
    n <<= 64;
    n += lo;
    return Rational(n, den);
}

} // namespace

AsymptoticCoefficients coefficients(std::uint64_t ell) {
    if (ell == 0) throw DomainError("shift l must be >= 1");
    AsymptoticCoefficients out;
    out.ell = ell;
    const Rational quarter(ell, 4), half(ell, 2), odd(odd_part(ell));
    out.c2 = 2 * sigma_nu(quarter, -2) - sigma_nu(half, -2) + sigma_nu(odd, -2);
    out.c1 = 2 * sigma_nu(quarter, -1) - sigma_nu(half, -1) + sigma_nu(odd, -1);
    const double pi = std::numbers::pi;
    out.res_32 = pi * pi / (126.0 * kZeta3) * to_double(out.c2);
    out.res_1 = -to_double(out.c1) / (3.0 * pi);
    return out;
}

Rational sharp_sum(std::uint64_t ell, std::uint64_t X, const ClassNumberTable& table) {
    if (ell == 0) throw DomainError("shift l must be >= 1");
    if (X + ell > table.limit())
        throw RangeError("sharp sum needs table limit >= X + l");
    const auto cells = table.raw();
    unsigned __int128 acc = 0;
    for (std::uint64_t n = 1; n <= X; ++n)
        acc += static_cast<unsigned __int128>(cells[n]) * cells[n + ell];
    return int128_to_rational(acc, 144);
}

double main_term(std::uint64_t ell, double X) {
    return 0.5 * coefficients(ell).res_32 * X * X;
}

double secondary_term(std::uint64_t ell, double X) {
    return (2.0 / 3.0) * coefficients(ell).res_1 * std::pow(X, 1.5);
}

ConvolutionReport prefix_series(std::uint64_t ell, std::span<const std::uint64_t> grid,
                                const ClassNumberTable& table) {
    if (ell == 0) throw DomainError("shift l must be >= 1");
    ConvolutionReport report;
    report.ell = ell;
    if (grid.empty()) return report;
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        throw RangeError("grid must be strictly increasing");
    if (grid.back() + ell > table.limit())
        throw RangeError("prefix series needs table limit >= max(grid) + l");

    const AsymptoticCoefficients co = coefficients(ell);
    const auto cells = table.raw();
    unsigned __int128 acc = 0;
    std::size_t g = 0;
    for (std::uint64_t n = 1; n <= grid.back(); ++n) {
        acc += static_cast<unsigned __int128>(cells[n]) * cells[n + ell];
        while (g < grid.size() && n == grid[g]) {
            ConvolutionRow row;
            row.X = n;
            row.sharp = int128_to_rational(acc, 144);
            const double X = double(n);
            row.main = 0.5 * co.res_32 * X * X;
            row.secondary = (2.0 / 3.0) * co.res_1 * std::pow(X, 1.5);
            row.residual = to_double(row.sharp) - row.main;
            row.residual2 = row.residual - row.secondary;
            report.rows.push_back(std::move(row));
            ++g;
        }
    }
    return report;
}

double smooth_sum(std::uint64_t ell, double X, const SmoothWeightSpec& spec,
                  const ClassNumberTable& table) {
    if (ell == 0) throw DomainError("shift l must be >= 1");
    if (!(X > 0)) throw DomainError("scale X must be positive");
    const double radius = spec.support_radius();
    const auto needed = static_cast<std::uint64_t>(std::ceil(X * radius));
    if (needed > table.limit())
        throw RangeError("smooth sum at scale " + std::to_string(X) +
                         " needs table limit >= " + std::to_string(needed));

    // w((m+l)/X) < 1e-16 outside X/radius <= m+l <= X*radius; everything
    // there is dropped as below accumulation noise.
    const auto cells = table.raw();
    if (X * radius <= double(ell)) return 0.0;
    const double lo_real = X / radius;
    std::uint64_t k_lo = lo_real <= 1 ? 1 : static_cast<std::uint64_t>(lo_real);
    std::uint64_t m_lo = k_lo > ell ? k_lo - ell : 1;
    const std::uint64_t m_hi = static_cast<std::uint64_t>(X * radius) - ell;

    CompensatedSum<double> acc;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        const std::uint64_t p = std::uint64_t(cells[m]) * cells[m + ell];
        if (p == 0) continue;
        const double lx = std::log(double(m + ell) / X);
        acc.add(double(p) * std::exp(-lx * lx));
    }
    return acc.value() / 144.0;
}

ErrorExponentFit fit_error_exponent(std::uint64_t ell, std::span<const std::uint64_t> grid,
                                    const ClassNumberTable& table, bool subtract_secondary) {
    if (grid.size() < 5)
        throw DegenerateGridError("error-exponent fit needs at least 5 grid points");
    if (grid.front() == 0 ||
        std::log10(double(grid.back()) / double(grid.front())) < 1.5 - 1e-9)
        throw DegenerateGridError("error-exponent fit needs a grid spanning >= 1.5 decades");

    const ConvolutionReport report = prefix_series(ell, grid, table);
    std::vector<double> lx, ly;
    for (const ConvolutionRow& row : report.rows) {
        const double r = subtract_secondary ? row.residual2 : row.residual;
        if (r == 0.0) continue;
        lx.push_back(std::log(double(row.X)));
        ly.push_back(std::log(std::abs(r)));
    }
    ErrorExponentFit fit;
    fit.points_used = static_cast<int>(lx.size());
    if (lx.empty()) {
        fit.all_zero_residual = true;
        return fit;
    }
    if (lx.size() < 2)
        throw DegenerateGridError("fewer than two nonzero residuals; slope undefined");
    fit.slope = least_squares_slope(lx, ly);
    return fit;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t start, double ratio, int count) {
    if (start == 0 || !(ratio > 1.0) || count < 1)
        throw DegenerateGridError("geometric grid needs start >= 1, ratio > 1, count >= 1");
    std::vector<std::uint64_t> grid;
    double x = double(start);
    for (int i = 0; i < count; ++i, x *= ratio) {
        const auto v = static_cast<std::uint64_t>(std::llround(x));
        if (grid.empty() || v > grid.back()) grid.push_back(v);
    }
    return grid;
}

} // namespace hcn
