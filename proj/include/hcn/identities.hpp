#ifndef HCN_IDENTITIES_HPP
#define HCN_IDENTITIES_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hcn/class_numbers.hpp"
#include "hcn/rational.hpp"

namespace hcn {

struct VerificationReport {
    std::string suite;
    std::string parameters;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    double max_discrepancy = 0;
    std::vector<std::uint64_t> witnesses; // failing inputs, empty iff failures == 0

    bool passed() const { return failures == 0; }
};

/// Kronecker-Hurwitz class number relation at n:
///   sum_{m^2 <= 4n} H(4n - m^2)  -  sum_{d|n} max(d, n/d)
/// returned exactly (in twelfths internally). Zero expected for every n >= 1.
/// Requires 4n <= table limit.
Rational check_kronecker_hurwitz(std::uint64_t n, const ClassNumberTable& table);

/// Three-squares identity at fundamental -n:
///   r3(n) - 12 (1 - (-n|2)) H(n),
/// exact. Throws DomainError when -n is not a fundamental discriminant.
Rational check_r3_identity(std::uint64_t n, std::uint32_t r3_value,
                           const ClassNumberTable& table);

struct R1IdentityCheck {
    std::complex<double> lhs, rhs;
    double discrepancy = 0;
};

/// Both sides of the square-pair divisor identity
///   sum_{n>=0} r1(n+l) r1(n) (n+l)^{1/2-s}
///     = 2^{2s} sum_{d|l, d = l/d mod 2} (d + l/d)^{1-2s},
/// each a finite sum (supported on m1^2 - m2^2 = l).
R1IdentityCheck check_r1_divisor_identity_detail(std::uint64_t ell, std::complex<double> s);
double check_r1_divisor_identity(std::uint64_t ell, std::complex<double> s);

// S_l(X) for l = 2 mod 4, which must vanish identically. Throws DomainError for
// other l, RangeError when X + l exceeds the table.
Rational check_vanishing(std::uint64_t ell, std::uint64_t X, const ClassNumberTable& table);

struct MomentSlope {
    double slope = 0;
    bool low_confidence = false; // grid spans less than one decade
};

/// Least-squares slope of log sum_{n<=X} htilde(-n)^alpha against log X.
/// Expected 1 + alpha/2. Grid must hold >= 3 increasing points within the table
/// (DegenerateGridError otherwise).
MomentSlope moment_slope(double alpha, std::span<const std::uint64_t> grid,
                         const PrimitiveClassTable& table);

// Suite runners used by the CLI and the acceptance tests.
VerificationReport run_kronecker_hurwitz_suite(const ClassNumberTable& table,
                                               std::uint64_t n_max);
VerificationReport run_r3_suite(const ClassNumberTable& table, std::uint64_t n_max);
VerificationReport run_r1_divisor_suite(std::uint64_t ell_max);
// Checks every l in {2,6,10,14} with X + l inside the table; RangeError if none fit.
VerificationReport run_vanishing_suite(const ClassNumberTable& table, std::uint64_t X);
// Slopes for alpha in {1,2} over a 5-point geometric grid on [X/10, X]; pass needs
// |slope - (1 + alpha/2)| <= 0.02.
VerificationReport run_moment_suite(const PrimitiveClassTable& table, std::uint64_t X);

} // namespace hcn

#endif
