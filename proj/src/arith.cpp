#include "hcn/arith.hpp"

#include <bit>
#include <cmath>

#include "hcn/errors.hpp"

namespace hcn {

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // repair the double rounding at the boundary
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(std::uint64_t n, std::uint64_t* root) {
    const std::uint64_t r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

std::uint64_t odd_part(std::uint64_t l) {
    if (l == 0) throw DomainError("odd_part requires a positive argument");
    return l >> std::countr_zero(l);
}

int r1(std::uint64_t n) {
    if (n == 0) return 1;
    return is_perfect_square(n) ? 2 : 0;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int kronecker_symbol(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw DomainError("Kronecker symbol (0,0) is undefined");
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0) return 0;

    // (a|2) by residue mod 8; applied once per factor of 2 in b
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    int k = 1;
    while (b % 2 == 0) {
        b /= 2;
        k *= tab2[((a % 8) + 8) % 8];
    }
    if (k == 0) return 0;
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    // b odd and positive; Jacobi with reciprocity
    a %= b;
    if (a < 0) a += b;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t bm8 = b % 8;
            if (bm8 == 3 || bm8 == 5) k = -k;
        }
        std::swap(a, b);
        if (a % 4 == 3 && b % 4 == 3) k = -k;
        a %= b;
    }
    return b == 1 ? k : 0;
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d >= 0) throw DomainError("fundamental discriminant test expects d < 0");
    const auto squarefree = [](std::uint64_t n) {
        for (std::uint64_t p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    const std::int64_t r4 = ((d % 4) + 4) % 4;
    if (r4 == 1) return squarefree(static_cast<std::uint64_t>(-d));
    if (r4 == 0) {
        const std::int64_t m = d / 4;
        const std::int64_t m4 = ((m % 4) + 4) % 4;
        if (m4 != 2 && m4 != 3) return false;
        return squarefree(static_cast<std::uint64_t>(-m));
    }
    return false;
}

Rational sigma_nu(const Rational& m, int nu) {
    if (denominator(m) != 1 || numerator(m) <= 0) return 0; // m not a positive integer
    const auto n = numerator(m).convert_to<std::uint64_t>();
    const auto term = [nu](std::uint64_t d) {
        BigInt p = boost::multiprecision::pow(BigInt(d),
                                              static_cast<unsigned>(nu >= 0 ? nu : -nu));
        return nu >= 0 ? Rational(p) : Rational(1, p);
    };
    Rational total = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += term(d);
        if (d != n / d) total += term(n / d);
    }
    return total;
}

} // namespace hcn
