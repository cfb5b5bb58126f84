#include "hcn/dirichlet.hpp"

#include <cmath>
#include <numbers>

#include "hcn/errors.hpp"
#include "hcn/quadrature.hpp"

namespace hcn {

namespace {

// exp(-6.1^2) ~ 6.9e-17: relative weight mass below double accumulation error.
constexpr double kLogSupport = 6.1;

void require_family(const SmoothWeightSpec& spec) {
    if (spec.family != "exp-log-square")
        throw UnsupportedFamilyError("unsupported smooth weight family: " + spec.family);
}

} // namespace

double SmoothWeightSpec::support_radius() const {
    require_family(*this);
    return std::exp(kLogSupport);
}

double SmoothWeightSpec::weight(double x) const {
    require_family(*this);
    if (!(x > 0)) throw DomainError("smooth weight requires x > 0");
    const double lx = std::log(x);
    return std::exp(-lx * lx);
}

std::complex<double> mellin_W(const SmoothWeightSpec& spec, std::complex<double> s) {
    require_family(spec);
    return (1.0 / std::numbers::inv_sqrtpi) * std::exp(s * s / 4.0);
}

TruncatedSeriesValue truncated_dirichlet(std::uint64_t l, std::complex<double> s,
                                         std::uint64_t N, const ClassNumberTable& table,
                                         double growth_constant) {
    if (!(s.real() > 1.5))
        throw DomainError("D_l(s) converges absolutely only for Re s > 3/2");
    if (N > table.limit() || N + l > table.limit())
        throw RangeError("partial sum needs table limit >= N + l");

    // l = 2 mod 4: every term has a factor H(k) with k = 1,2 mod 4, so the series
    // vanishes identically and the tail is exactly zero.
    if (l % 4 == 2) return {std::complex<double>(0, 0), 0, 0.0};

    const double C =
        growth_constant > 0 ? growth_constant : hurwitz_growth_constant(table);
    const auto cells = table.raw();
    const std::complex<double> e = -(s + 0.5);
    CompensatedComplexSum<double> acc;
    std::uint64_t terms = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const std::uint64_t p = std::uint64_t(cells[n]) * cells[n + l];
        if (p == 0) continue;
        acc.add((double(p) / 144.0) * std::exp(e * std::log(double(n + l))));
        ++terms;
    }

    // Tail: H(n)H(n+l) <= C^2 (n+l) (1 + log(n+l))^2, so the dropped part is at most
    // C^2 [ f(N+1) + int_{N+1}^inf f ] with f(x) = (x+l)^{1/2-sigma} (1+log(x+l))^2,
    // decreasing on x+l >= e for sigma > 3/2. The integral in closed form:
    //   U^{1-p} [ L^2/(p-1) + 2L/(p-1)^2 + 2/(p-1)^3 ],  U = N+1+l, p = sigma-1/2,
    //   L = 1 + log U.
    const double sigma = s.real();
    const double p = sigma - 0.5;
    const double U = double(N + 1 + l);
    const double L = 1.0 + std::log(U);
    const double integral =
        std::pow(U, 1.0 - p) *
        (L * L / (p - 1) + 2 * L / ((p - 1) * (p - 1)) + 2 / ((p - 1) * (p - 1) * (p - 1)));
    const double first = std::pow(U, 0.5 - sigma) * L * L;
    return {acc.value(), terms, C * C * (first + integral)};
}

} // namespace hcn
