#ifndef HCN_DIRICHLET_HPP
#define HCN_DIRICHLET_HPP

#include <complex>
#include <cstdint>
#include <string>

#include "hcn/class_numbers.hpp"

namespace hcn {

/// Smooth cutoff weight with a closed-form Mellin transform. The one supported
/// family is w(x) = exp(-log^2 x), whose transform W(s) = sqrt(pi) e^{s^2/4} is
/// entire, even, and decays like e^{-(Im s)^2/4} on vertical lines.
struct SmoothWeightSpec {
    std::string family = "exp-log-square";

    // x beyond which (in either direction, multiplicatively) the relative weight
    // drops below 1e-16: |log x| <= 6.1.
    double support_radius() const;

    // w(x); requires x > 0 and a supported family.
    double weight(double x) const;
};

// W(s) for the spec.family evaluator; UnsupportedFamilyError otherwise.
std::complex<double> mellin_W(const SmoothWeightSpec& spec, std::complex<double> s);

/// Partial sum of D_l(s) = sum_{n>=1} H(n) H(n+l) (n+l)^{-s-1/2} with a certified
/// tail bound, valid in the absolute-convergence region Re s > 3/2.
struct TruncatedSeriesValue {
    std::complex<double> value{};
    std::uint64_t terms_used = 0;
    double tail_bound = 0;
};

/// Sums n <= N with principal-branch powers. tail_bound majorizes the dropped tail
/// through H(n) <= C sqrt(n)(1 + log n):
///   sum_{n>N} <= C^2 [ f(N+1) + int_{N+1}^inf f ],
///   f(x) = (x+l)^{1/2 - Re s} (1 + log(x+l))^2,
/// with the integral in closed form. C defaults to the measured growth constant of
/// the table; pass a cached value to skip the O(limit) scan.
/// Throws DomainError for Re s <= 3/2, RangeError when N + l exceeds the table.
TruncatedSeriesValue truncated_dirichlet(std::uint64_t l, std::complex<double> s,
                                         std::uint64_t N, const ClassNumberTable& table,
                                         double growth_constant = 0.0);

} // namespace hcn

#endif
