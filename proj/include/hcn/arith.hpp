#ifndef HCN_ARITH_HPP
#define HCN_ARITH_HPP

#include <cstdint>
#include <vector>

#include "hcn/rational.hpp"

namespace hcn {

// Exact integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);

// True iff n is a perfect square; on success *root receives the nonnegative root.
bool is_perfect_square(std::uint64_t n, std::uint64_t* root = nullptr);

// l with all factors of 2 removed. Requires l >= 1.
std::uint64_t odd_part(std::uint64_t l);

// Number of m in Z with m^2 = n: 1 for n = 0, 2 for positive squares, 0 otherwise.
int r1(std::uint64_t n);

// Divisors of n in increasing order (trial division; n >= 1).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Full Kronecker symbol (a|b), extending the Jacobi symbol by
/// (a|2) = 0 for even a, +1 for a = ±1 mod 8, -1 for a = ±3 mod 8,
/// (a|-1) = sign of a, and (a|0) = [|a| = 1].
/// Throws DomainError for (0,0).
int kronecker_symbol(std::int64_t a, std::int64_t b);

// True iff d is a fundamental discriminant: d = 1 mod 4 squarefree, or d = 4m with
// m = 2,3 mod 4 squarefree. Requires d < 0 (only negative discriminants occur here).
bool is_fundamental_discriminant(std::int64_t d);

/// Sum of nu-th powers of the divisors of m, as an exact rational.
/// By convention sigma_nu(m) = 0 whenever m is not a positive integer,
/// so expressions like sigma_nu(l/4) vanish unless 4 | l.
Rational sigma_nu(const Rational& m, int nu);

} // namespace hcn

#endif
