#include "hcn/identities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hcn/arith.hpp"
#include "hcn/convolution.hpp"
#include "hcn/errors.hpp"
#include "hcn/quadrature.hpp"

namespace hcn {

namespace {

constexpr std::size_t kMaxWitnesses = 100;

void record(VerificationReport& report, std::uint64_t input, double discrepancy) {
    ++report.checked;
    if (discrepancy != 0) {
        ++report.failures;
        if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(input);
    }
    report.max_discrepancy = std::max(report.max_discrepancy, std::abs(discrepancy));
}

} // namespace

Rational check_kronecker_hurwitz(std::uint64_t n, const ClassNumberTable& table) {
    if (n == 0) throw DomainError("relation defined for n >= 1");
    if (4 * n > table.limit())
        throw RangeError("Kronecker-Hurwitz check at n needs table limit >= 4n");
    // LHS in twelfths: m = 0 once, +-m twice
    std::int64_t lhs12 = table.twelve_times(4 * n);
    for (std::uint64_t m = 1; m * m <= 4 * n; ++m)
        lhs12 += 2 * table.twelve_times(4 * n - m * m);
    std::uint64_t rhs = 0;
    for (std::uint64_t d : divisors(n)) rhs += std::max(d, n / d);
    return Rational(lhs12 - 12 * static_cast<std::int64_t>(rhs), 12);
}

Rational check_r3_identity(std::uint64_t n, std::uint32_t r3_value,
                           const ClassNumberTable& table) {
    if (n == 0 || !is_fundamental_discriminant(-static_cast<std::int64_t>(n)))
        throw DomainError("-n must be a fundamental discriminant");
    const int chi = kronecker_symbol(-static_cast<std::int64_t>(n), 2);
    // r3(n) - 12 (1 - chi) H(n), exact in twelfths
    const std::int64_t diff12 =
        12 * static_cast<std::int64_t>(r3_value) -
        12 * (1 - chi) * table.twelve_times(n);
    return Rational(diff12, 12);
}

R1IdentityCheck check_r1_divisor_identity_detail(std::uint64_t ell,
                                                 std::complex<double> s) {
    if (ell == 0) throw DomainError("shift l must be >= 1");
    R1IdentityCheck out;
    // LHS: supported on n + l = m1^2, n = m2^2; m1^2 - m2^2 = l forces
    // m1 <= (l+1)/2
    std::complex<double> lhs = 0;
    for (std::uint64_t m1 = 1; m1 <= (ell + 1) / 2; ++m1) {
        if (m1 * m1 < ell) continue;
        const std::uint64_t rest = m1 * m1 - ell;
        std::uint64_t m2 = 0;
        if (!is_perfect_square(rest, &m2)) continue;
        const double r = 2.0 * (m2 == 0 ? 1.0 : 2.0);
        lhs += r * std::exp((0.5 - s) * std::log(double(m1 * m1)));
    }
    // RHS: 2^{2s} sum over divisor pairs of equal parity
    std::complex<double> rhs = 0;
    for (std::uint64_t d : divisors(ell)) {
        const std::uint64_t e = ell / d;
        if ((d % 2) != (e % 2)) continue;
        rhs += std::exp((1.0 - 2.0 * s) * std::log(double(d + e)));
    }
    rhs *= std::exp(2.0 * s * std::log(2.0));
    out.lhs = lhs;
    out.rhs = rhs;
    out.discrepancy = std::abs(lhs - rhs);
    return out;
}

double check_r1_divisor_identity(std::uint64_t ell, std::complex<double> s) {
    return check_r1_divisor_identity_detail(ell, s).discrepancy;
}

Rational check_vanishing(std::uint64_t ell, std::uint64_t X, const ClassNumberTable& table) {
    if (ell % 4 != 2) throw DomainError("vanishing check applies to l = 2 mod 4");
    return sharp_sum(ell, X, table);
}

MomentSlope moment_slope(double alpha, std::span<const std::uint64_t> grid,
                         const PrimitiveClassTable& table) {
    if (!(alpha > 0)) throw DomainError("moment exponent alpha must be positive");
    if (grid.size() < 3) throw DegenerateGridError("moment fit needs >= 3 grid points");
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end() || grid.front() == 0)
        throw DegenerateGridError("moment grid must be strictly increasing and positive");
    if (grid.back() > table.limit())
        throw RangeError("moment grid exceeds primitive table limit");

    const auto cells = table.raw();
    std::vector<double> lx, ly;
    CompensatedSum<double> acc;
    std::size_t g = 0;
    for (std::uint64_t n = 1; n <= grid.back(); ++n) {
        if (cells[n] != 0) acc.add(std::pow(double(cells[n]), alpha));
        while (g < grid.size() && n == grid[g]) {
            lx.push_back(std::log(double(n)));
            ly.push_back(std::log(acc.value()));
            ++g;
        }
    }
    MomentSlope out;
    out.slope = least_squares_slope(lx, ly);
    out.low_confidence = std::log10(double(grid.back()) / double(grid.front())) < 1.0 - 1e-9;
    return out;
}

VerificationReport run_kronecker_hurwitz_suite(const ClassNumberTable& table,
                                               std::uint64_t n_max) {
    VerificationReport report;
    report.suite = "kronecker-hurwitz";
    report.parameters = "n <= " + std::to_string(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        record(report, n, to_double(check_kronecker_hurwitz(n, table)));
    return report;
}

VerificationReport run_r3_suite(const ClassNumberTable& table, std::uint64_t n_max) {
    VerificationReport report;
    report.suite = "r3";
    report.parameters = "fundamental -n, n <= " + std::to_string(n_max);
    const std::vector<std::uint32_t> r3 = r3_table(n_max);
    for (std::uint64_t n = 3; n <= n_max; ++n) {
        if (!is_fundamental_discriminant(-static_cast<std::int64_t>(n))) continue;
        record(report, n, to_double(check_r3_identity(n, r3[n], table)));
    }
    return report;
}

VerificationReport run_r1_divisor_suite(std::uint64_t ell_max) {
    VerificationReport report;
    report.suite = "r1-divisor";
    report.parameters = "l <= " + std::to_string(ell_max) + ", s in {1, 2, 5/2, 2+3i}";
    const std::complex<double> s_grid[] = {{1, 0}, {2, 0}, {2.5, 0}, {2, 3}};
    for (std::uint64_t ell = 1; ell <= ell_max; ++ell) {
        for (const auto& s : s_grid) {
            const R1IdentityCheck c = check_r1_divisor_identity_detail(ell, s);
            const double tol = 1e-10 * (1.0 + std::abs(c.rhs));
            ++report.checked;
            if (c.discrepancy > tol) {
                ++report.failures;
                if (report.witnesses.size() < kMaxWitnesses)
                    report.witnesses.push_back(ell);
            }
            report.max_discrepancy = std::max(report.max_discrepancy, c.discrepancy);
        }
    }
    return report;
}

VerificationReport run_vanishing_suite(const ClassNumberTable& table, std::uint64_t X) {
    VerificationReport report;
    report.suite = "vanishing";
    report.parameters = "X = " + std::to_string(X) + ", l in {2,6,10,14}";
    bool any = false;
    for (std::uint64_t ell : {2ull, 6ull, 10ull, 14ull}) {
        if (X + ell > table.limit()) continue;
        any = true;
        record(report, ell, to_double(check_vanishing(ell, X, table)));
    }
    if (!any) throw RangeError("vanishing suite: no shift fits the table limit");
    return report;
}

VerificationReport run_moment_suite(const PrimitiveClassTable& table, std::uint64_t X) {
    VerificationReport report;
    report.suite = "moment";
    report.parameters = "grid [X/10, X], X = " + std::to_string(X) + ", alpha in {1,2}";
    if (X < 10 || X > table.limit())
        throw RangeError("moment suite needs 10 <= X <= table limit");
    const std::vector<std::uint64_t> grid =
        geometric_grid(std::max<std::uint64_t>(X / 10, 1), std::pow(10.0, 0.25), 5);
    std::vector<std::uint64_t> clipped;
    for (std::uint64_t x : grid) clipped.push_back(std::min(x, X));
    clipped.back() = X;
    for (double alpha : {1.0, 2.0}) {
        const MomentSlope ms = moment_slope(alpha, clipped, table);
        const double target = 1.0 + alpha / 2.0;
        const double dev = std::abs(ms.slope - target);
        ++report.checked;
        if (dev > 0.02 || ms.low_confidence) {
            ++report.failures;
            if (report.witnesses.size() < kMaxWitnesses)
                report.witnesses.push_back(static_cast<std::uint64_t>(alpha));
        }
        report.max_discrepancy = std::max(report.max_discrepancy, dev);
    }
    return report;
}

} // namespace hcn
