#ifndef HCN_SPECIAL_FUNCTIONS_HPP
#define HCN_SPECIAL_FUNCTIONS_HPP

#include <complex>
#include <cstdint>

namespace hcn {

/// Upper incomplete gamma Gamma(-1/2, y) = int_y^inf t^{-3/2} e^{-t} dt, y > 0.
/// y <= 30: Gamma(-1/2,y) = 2 e^{-y}/sqrt(y) - 2 sqrt(pi) erfc(sqrt(y));
/// y >  30: asymptotic series e^{-y} y^{-3/2} (1 - 3/(2y) + 15/(4y^2) - ...),
/// which sidesteps the cancellation the erfc form develops for large y.
double incomplete_gamma_upper_half(double y);

// Same value in extended precision; used by the quadrature evaluators below.
long double upper_gamma_m12(long double y);

// e^y Gamma(-1/2, y). Stable for all y > 0 (no overflow/underflow pairing),
// tends to 2/sqrt(y) as y -> 0 and to y^{-3/2} as y -> inf.
long double upper_gamma_m12_scaled(long double y);

/// G_{3/2}(s, n1, n2) = int_0^inf y^{s+1/2} Gamma(-1/2, n1 y) Gamma(-1/2, n2 y)
///                      e^{n1 y} dy/y,  for Re s > 1/2 and 1 <= n1 < n2.
/// Evaluated as a globally adaptive integral in u = log y (the algebraic y^{s-3/2}
/// endpoint behavior becomes a plain exponential there), with the incomplete gammas
/// in scaled form so that e^{n1 y} never overflows. Internally long double: at
/// s = 2 + 20i the value sits ~14 orders below the L1 mass of the integrand.
std::complex<double> g32(std::complex<double> s, std::uint64_t n1, std::uint64_t n2);

/// 2F1(3/2, 1; s+3/2 | 1 - l/m) through the Euler integral
/// (s+1/2) int_0^1 (1-t)^{s-1/2} (1 - (1-l/m) t)^{-3/2} dt,  Re s > -1/2.
/// Equals m/l at s = 0 (degenerate parameter identity).
std::complex<double> hyp2f1_bounding(std::complex<double> s, std::uint64_t m,
                                     std::uint64_t l);

/// 2F1(s, s+1/2; s+3/2 | 1 - l/m) for 1 <= m <= l-1 and Re s > 0, via the
/// transformation 2F1(s,s+1/2;s+3/2|z) = (l/m)^{1-s} 2F1(3/2,1;s+3/2|z).
std::complex<double> hyp2f1_special(std::complex<double> s, std::uint64_t m,
                                    std::uint64_t l);

} // namespace hcn

#endif
