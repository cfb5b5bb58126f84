#ifndef HCN_CONVOLUTION_HPP
#define HCN_CONVOLUTION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hcn/class_numbers.hpp"
#include "hcn/dirichlet.hpp"
#include "hcn/rational.hpp"

namespace hcn {

/// Divisor factors and residues attached to the shift l:
///   c2 = 2 sigma_{-2}(l/4) - sigma_{-2}(l/2) + sigma_{-2}(l_odd)   (exact)
///   c1 = 2 sigma_{-1}(l/4) - sigma_{-1}(l/2) + sigma_{-1}(l_odd)   (exact)
///   res_32 = pi^2 c2 / (126 zeta(3))     residue at s = 3/2
///   res_1  = -c1 / (3 pi)                residue at s = 1
/// Both factors vanish identically for l = 2 mod 4.
struct AsymptoticCoefficients {
    std::uint64_t ell = 0;
    Rational c2, c1;
    double res_32 = 0, res_1 = 0;
};

AsymptoticCoefficients coefficients(std::uint64_t ell);

// Exact S_l(X) = sum_{n=1..X} H(n) H(n+l); denominator divides 144.
// Throws RangeError when X + l exceeds the table.
Rational sharp_sum(std::uint64_t ell, std::uint64_t X, const ClassNumberTable& table);

// (1/2) res_32 X^2  and  (2/3) res_1 X^{3/2}: the Perron residue extractions.
double main_term(std::uint64_t ell, double X);
double secondary_term(std::uint64_t ell, double X);

struct ConvolutionRow {
    std::uint64_t X = 0;
    Rational sharp;
    double main = 0, secondary = 0;
    double residual = 0;  // sharp - main
    double residual2 = 0; // sharp - main - secondary
};

struct ConvolutionReport {
    std::uint64_t ell = 0;
    std::vector<ConvolutionRow> rows;
};

// One pass over the table emitting exact prefix sums at every grid point.
// Grid must be strictly increasing with max(grid) + l <= table limit.
ConvolutionReport prefix_series(std::uint64_t ell, std::span<const std::uint64_t> grid,
                                const ClassNumberTable& table);

/// Smoothed convolution sum_{m>=1} H(m) H(m+l) w((m+l)/X), truncated where the
/// relative weight drops below 1e-16 (|log((m+l)/X)| > 6.1 for the default family).
/// The H(0) term is excluded to match the index set of D_l(s). Compensated
/// accumulation. Requires table limit >= ceil(X * support_radius).
double smooth_sum(std::uint64_t ell, double X, const SmoothWeightSpec& spec,
                  const ClassNumberTable& table);

struct ErrorExponentFit {
    double slope = 0;
    bool all_zero_residual = false; // every grid residual vanished (l = 2 mod 4)
    int points_used = 0;
};

/// Least-squares slope of log |S_l(X) - main [- secondary]| against log X over the
/// grid points with nonzero residual. Grid contract: >= 5 points spanning >= 1.5
/// decades (DegenerateGridError otherwise).
ErrorExponentFit fit_error_exponent(std::uint64_t ell, std::span<const std::uint64_t> grid,
                                    const ClassNumberTable& table, bool subtract_secondary);

// start, round(start*ratio), ... (count points, deduplicated after rounding).
std::vector<std::uint64_t> geometric_grid(std::uint64_t start, double ratio, int count);

} // namespace hcn

#endif
