#include <doctest.h>

#include "hcn/arith.hpp"
#include "hcn/errors.hpp"
#include "oracles.hpp"

using namespace hcn;

TEST_CASE("isqrt and perfect squares") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(999999999999ull) == 999999);
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        const std::uint64_t r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    std::uint64_t root = 0;
    CHECK(is_perfect_square(144, &root));
    CHECK(root == 12);
    CHECK_FALSE(is_perfect_square(145));
}

TEST_CASE("odd part") {
    CHECK(odd_part(12) == 3);
    CHECK(odd_part(7) == 7);
    CHECK(odd_part(64) == 1);
    CHECK(odd_part(1) == 1);
    CHECK_THROWS_AS(odd_part(0), DomainError);
}

TEST_CASE("r1 counts square representations") {
    CHECK(r1(0) == 1);
    CHECK(r1(9) == 2);
    CHECK(r1(8) == 0);
    CHECK(r1(1) == 2);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
}

TEST_CASE("Kronecker symbol matches the factorization definition") {
    CHECK_THROWS_AS(kronecker_symbol(0, 0), DomainError);
    for (std::int64_t a = -60; a <= 60; ++a)
        for (std::int64_t b = -60; b <= 60; ++b) {
            if (a == 0 && b == 0) continue;
            CAPTURE(a);
            CAPTURE(b);
            CHECK(kronecker_symbol(a, b) == oracles::kronecker(a, b));
        }
}

TEST_CASE("Kronecker (a|2) rule and periodicity") {
    CHECK(kronecker_symbol(-7, 2) == 1);  // -7 = 1 mod 8
    CHECK(kronecker_symbol(-3, 2) == -1); // -3 = 5 mod 8
    CHECK(kronecker_symbol(-4, 2) == 0);
    for (std::int64_t a = -40; a <= 40; ++a)
        CHECK(kronecker_symbol(a, 2) == kronecker_symbol(a + 8, 2));
}

TEST_CASE("quadratic reciprocity spot checks") {
    // odd positive coprime p, q: (p|q)(q|p) = (-1)^{(p-1)(q-1)/4}
    const std::int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
    for (std::int64_t p : primes)
        for (std::int64_t q : primes) {
            if (p == q) continue;
            const int lhs = kronecker_symbol(p, q) * kronecker_symbol(q, p);
            const int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("fundamental discriminants") {
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-4));
    CHECK_FALSE(is_fundamental_discriminant(-12)); // -12 = 4*(-3), -3 = 1 mod 4
    CHECK(is_fundamental_discriminant(-7));
    CHECK(is_fundamental_discriminant(-8));
    CHECK_FALSE(is_fundamental_discriminant(-9));
    CHECK_FALSE(is_fundamental_discriminant(-16));
    CHECK(is_fundamental_discriminant(-15));
    CHECK(is_fundamental_discriminant(-20));
    CHECK_FALSE(is_fundamental_discriminant(-18));
    CHECK_THROWS_AS(is_fundamental_discriminant(5), DomainError);

    // brute reference: d fundamental iff d is the discriminant of Q(sqrt(d)),
    // i.e. d = 1 mod 4 squarefree or 4m with m = 2,3 mod 4 squarefree
    const auto squarefree = [](std::int64_t n) {
        for (std::int64_t p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    for (std::int64_t d = -1; d >= -500; --d) {
        bool expect = false;
        if (((d % 4) + 4) % 4 == 1) expect = squarefree(-d);
        if (d % 4 == 0) {
            const std::int64_t m = d / 4;
            const std::int64_t m4 = ((m % 4) + 4) % 4;
            expect = (m4 == 2 || m4 == 3) && squarefree(-m);
        }
        CAPTURE(d);
        CHECK(is_fundamental_discriminant(d) == expect);
    }
}

TEST_CASE("sigma_nu exact values and conventions") {
    CHECK(sigma_nu(Rational(1), -2) == Rational(1));
    CHECK(sigma_nu(Rational(2), -2) == Rational(5, 4));
    CHECK(sigma_nu(Rational(1, 2), -1) == Rational(0)); // not an integer
    CHECK(sigma_nu(Rational(-6), 1) == Rational(0));    // not positive
    CHECK(sigma_nu(Rational(6), 1) == Rational(12));
    CHECK(sigma_nu(Rational(6), 0) == Rational(4));
    CHECK(sigma_nu(Rational(4), -2) == Rational(21, 16));
    CHECK(sigma_nu(Rational(12), -1) == Rational(7, 3)); // (1+1/2+1/3+1/4+1/6+1/12)
    // sigma_{-nu}(n) = sigma_nu(n)/n^nu
    for (std::uint64_t n = 1; n <= 40; ++n)
        for (int nu = 1; nu <= 3; ++nu)
            CHECK(sigma_nu(Rational(n), -nu) ==
                  sigma_nu(Rational(n), nu) / Rational(BigInt(boost::multiprecision::pow(
                                                  BigInt(n), unsigned(nu)))));
}
