#ifndef HCN_CLASS_NUMBERS_HPP
#define HCN_CLASS_NUMBERS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hcn/rational.hpp"

namespace hcn {

// One Hurwitz class number, stored exactly as 12*H(n).
// twelve_times = -1 iff n = 0 (H(0) = -1/12); 0 for n = 1,2 mod 4.
struct HurwitzValue {
    std::uint64_t n = 0;
    std::int64_t twelve_times = 0;

    Rational hurwitz() const { return Rational(twelve_times, 12); }
};

/// Dense table of 12*H(n) for n = 0..limit. Immutable after construction.
///
/// Cells are unsigned 32-bit; n = 0 is the single negative value and is handled by
/// convention in twelve_times() (the stored cell is 0). 12*H(n) < 2^32 for all
/// n <= 10^12, far beyond anything addressable here.
class ClassNumberTable {
  public:
    ClassNumberTable(std::uint64_t limit, std::vector<std::uint32_t> cells);

    std::uint64_t limit() const { return limit_; }

    // 12*H(n); -1 at n = 0. Throws RangeError for n > limit.
    std::int64_t twelve_times(std::uint64_t n) const;

    // H(n) as an exact rational.
    Rational hurwitz(std::uint64_t n) const { return Rational(twelve_times(n), 12); }

    // Raw cells, index n = 0..limit (cell 0 is a placeholder and reads 0).
    std::span<const std::uint32_t> raw() const { return cells_; }

  private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> cells_;
};

/// Bulk sieve: enumerates reduced forms (a,b,c) with -a < b <= a <= c (b >= 0 when
/// a = c) and accumulates weight 12 per class at n = 4ac - b^2, except weight 6 for
/// (a,0,a) and weight 4 for (a,a,a). Parallel over disjoint index blocks; the output
/// is identical for every thread count.
/// Throws CapacityError when limit exceeds what 4-byte cells can address/hold.
ClassNumberTable sieve_hurwitz(std::uint64_t limit, unsigned threads = 0);

/// Single-value computation of 12*H(n), independent of the sieve: walks b with
/// b^2 = -n mod 4, 3b^2 <= n, and enumerates divisors a | (n+b^2)/4 with
/// max(b,1) <= a <= sqrt((n+b^2)/4) by trial division.
HurwitzValue hurwitz_single(std::uint64_t n);

// Number of classes of primitive reduced forms of discriminant -n (0 when -n is not
// a discriminant). Unweighted count; requires n >= 1.
std::uint64_t primitive_class_number(std::uint64_t n);

// h(-n) = sum over f^2 | n of the primitive class number of -n/f^2.
std::uint64_t total_class_number(std::uint64_t n);

/// Dense table of primitive class counts, values[n] = htilde(-n) for n = 0..limit.
class PrimitiveClassTable {
  public:
    PrimitiveClassTable(std::uint64_t limit, std::vector<std::uint32_t> cells);

    std::uint64_t limit() const { return limit_; }
    std::uint64_t count(std::uint64_t n) const;
    std::span<const std::uint32_t> raw() const { return cells_; }

  private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> cells_;
};

PrimitiveClassTable sieve_primitive(std::uint64_t limit, unsigned threads = 0);

// r_2(n) for n = 0..limit by direct lattice enumeration of x^2 + y^2.
std::vector<std::uint32_t> r2_table(std::uint64_t limit);

// r_3(n) for n = 0..limit, convolving the r_2 table with squares.
std::vector<std::uint32_t> r3_table(std::uint64_t limit);

// max over 1 <= n <= limit of H(n) / (sqrt(n) (1 + log n)). Effective growth
// constant used to certify Dirichlet-series tail bounds.
double hurwitz_growth_constant(const ClassNumberTable& table);

} // namespace hcn

#endif
