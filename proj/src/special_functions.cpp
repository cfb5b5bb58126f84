#include "hcn/special_functions.hpp"

#include <cmath>

#include "hcn/errors.hpp"
#include "hcn/quadrature.hpp"

namespace hcn {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kSqrtPi = 1.77245385090551602729816748334114518L;

// Crossover between the erfc form and the asymptotic series. At y = 30 the erfc
// form has lost ~1.5 digits to cancellation and the series is already below
// long-double epsilon at its smallest term.
constexpr long double kSeriesCrossover = 30.0L;

// Asymptotic tail sum for Gamma(-1/2,y) without the e^{-y} y^{-3/2} prefactor:
// 1 - 3/(2y) + 15/(4y^2) - 105/(8y^3) + ...; terms shrink until 2k+1 > 2y.
long double asymptotic_factor(long double y) {
    long double sum = 1, term = 1;
    for (int k = 1; k < 200; ++k) {
        term *= -(2 * k + 1) / (2 * y);
        const long double prev = sum;
        sum += term;
        if (std::abs(term) <= std::abs(sum) * 1e-21L || sum == prev) break;
        if (static_cast<long double>(2 * k + 1) > 2 * y) break; // divergence point
    }
    return sum;
}

} // namespace

long double upper_gamma_m12(long double y) {
    if (!(y > 0)) throw DomainError("Gamma(-1/2, y) requires y > 0");
    if (y <= kSeriesCrossover) {
        const long double sy = std::sqrt(y);
        return 2 * std::exp(-y) / sy - 2 * kSqrtPi * std::erfc(sy);
    }
    return std::exp(-y) * asymptotic_factor(y) / (y * std::sqrt(y));
}

long double upper_gamma_m12_scaled(long double y) {
    if (!(y > 0)) throw DomainError("Gamma(-1/2, y) requires y > 0");
    if (y <= kSeriesCrossover) {
        const long double sy = std::sqrt(y);
        // e^y erfc(sqrt(y)) stays O(1) here; no overflow pairing
        return 2 / sy - 2 * kSqrtPi * std::exp(y) * std::erfc(sy);
    }
    return asymptotic_factor(y) / (y * std::sqrt(y));
}

double incomplete_gamma_upper_half(double y) {
    return static_cast<double>(upper_gamma_m12(static_cast<long double>(y)));
}

std::complex<double> g32(std::complex<double> s, std::uint64_t n1, std::uint64_t n2) {
    if (!(s.real() > 0.5))
        throw DomainError("G_{3/2}(s, n1, n2) converges only for Re s > 1/2");
    if (n1 == 0 || n1 >= n2)
        throw DomainError("G_{3/2}(s, n1, n2) requires 1 <= n1 < n2");

    using C = std::complex<long double>;
    const long double sigma = s.real(), tau = s.imag();
    const long double a1 = static_cast<long double>(n1), a2 = static_cast<long double>(n2);

    // In u = log y the integrand is exp(u(s + 1/2)) S1(n1 e^u) S1(n2 e^u) e^{-n2 e^u}
    // with S1(x) = e^x Gamma(-1/2, x): analytic, ~ 4 e^{u(sigma-1/2)}/sqrt(n1 n2) on
    // the left and double-exponentially small on the right.
    const long double u_lo = -72.0L / (sigma - 0.5L);
    const long double x_hi = 120.0L + 25.0L * std::max<long double>(sigma, 1);
    const long double u_hi = std::log(x_hi / a2);

    const auto f = [&](long double u) -> C {
        const long double ey = std::exp(u);
        const long double mag = std::exp((sigma + 0.5L) * u - a2 * ey) *
                                upper_gamma_m12_scaled(a1 * ey) *
                                upper_gamma_m12_scaled(a2 * ey);
        const long double phase = tau * u;
        return {mag * std::cos(phase), mag * std::sin(phase)};
    };

    QuadratureOptions opt;
    opt.rel_tol = 1e-11;
    opt.max_panels = 40000;
    const long double knots[] = {-std::log(a2), -std::log(a1), 0.0L};
    const auto res = integrate_adaptive<long double>(f, u_lo, u_hi, opt,
                                                     std::span<const long double>(knots));
    return {static_cast<double>(res.value.real()), static_cast<double>(res.value.imag())};
}

std::complex<double> hyp2f1_bounding(std::complex<double> s, std::uint64_t m,
                                     std::uint64_t l) {
    if (!(s.real() > -0.5))
        throw DomainError("Euler integral for 2F1(3/2,1;s+3/2|.) needs Re s > -1/2");
    if (m == 0 || l == 0) throw DomainError("2F1 arguments require m, l >= 1");

    using C = std::complex<long double>;
    const long double sigma = s.real(), tau = s.imag();
    const long double ratio = static_cast<long double>(l) / static_cast<long double>(m);

    // (s+1/2) int_0^1 v^{s-1/2} psi(v) dv with psi(v) = (l/m + (1 - l/m) v)^{-3/2},
    // integrated in v = e^w; the v^{s-1/2} endpoint power becomes exp(w(s+1/2)).
    const long double w_lo = -50.0L / (sigma + 0.5L);
    const auto f = [&](long double w) -> C {
        const long double v = std::exp(w);
        const long double psi = std::pow(ratio + (1 - ratio) * v, -1.5L);
        const long double mag = std::exp((sigma + 0.5L) * w) * psi;
        const long double phase = tau * w;
        return {mag * std::cos(phase), mag * std::sin(phase)};
    };

    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    opt.max_panels = 40000;
    const auto res = integrate_adaptive<long double>(f, w_lo, 0.0L, opt);
    const C sv(static_cast<long double>(s.real()) + 0.5L, static_cast<long double>(s.imag()));
    const C value = sv * res.value;
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

std::complex<double> hyp2f1_special(std::complex<double> s, std::uint64_t m,
                                    std::uint64_t l) {
    if (!(s.real() > 0)) throw DomainError("2F1(s, s+1/2; s+3/2 | .) requires Re s > 0");
    if (m < 1 || m + 1 > l) throw DomainError("2F1 shift arguments require 1 <= m <= l-1");
    const std::complex<double> b = hyp2f1_bounding(s, m, l);
    const double log_ratio = std::log(static_cast<double>(l) / static_cast<double>(m));
    const std::complex<double> prefactor = std::exp((1.0 - s) * log_ratio);
    return prefactor * b;
}

} // namespace hcn
