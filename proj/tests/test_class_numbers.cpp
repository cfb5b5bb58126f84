#include <doctest.h>

#include <cmath>

#include "hcn/class_numbers.hpp"
#include "hcn/errors.hpp"
#include "oracles.hpp"

using namespace hcn;

TEST_CASE("sieve spot values") {
    const ClassNumberTable t = sieve_hurwitz(12);
    CHECK(t.twelve_times(0) == -1);
    CHECK(t.twelve_times(1) == 0);
    CHECK(t.twelve_times(2) == 0);
    CHECK(t.twelve_times(3) == 4);  // H(3) = 1/3
    CHECK(t.twelve_times(4) == 6);  // H(4) = 1/2
    CHECK(t.twelve_times(5) == 0);
    CHECK(t.twelve_times(11) == 12);
    CHECK(t.twelve_times(12) == 16); // H(12) = 4/3
    CHECK(t.hurwitz(12) == Rational(4, 3));
    CHECK_THROWS_AS(t.twelve_times(13), RangeError);
}

TEST_CASE("sieve at limit 0 holds only the convention value") {
    const ClassNumberTable t = sieve_hurwitz(0);
    CHECK(t.limit() == 0);
    CHECK(t.twelve_times(0) == -1);
}

TEST_CASE("single-value spot checks") {
    CHECK(hurwitz_single(0).twelve_times == -1);
    CHECK(hurwitz_single(23).twelve_times == 36); // H(23) = 3
    CHECK(hurwitz_single(16).twelve_times == 18); // H(16) = 3/2
    CHECK(hurwitz_single(1).twelve_times == 0);
    CHECK(hurwitz_single(2).twelve_times == 0);
    CHECK(hurwitz_single(3).hurwitz() == Rational(1, 3));
}

TEST_CASE("sieve, single-value, and brute-force scan agree") {
    const std::uint64_t limit = 3000;
    const ClassNumberTable t = sieve_hurwitz(limit);
    for (std::uint64_t n = 0; n <= limit; ++n) {
        CAPTURE(n);
        CHECK(t.twelve_times(n) == hurwitz_single(n).twelve_times);
    }
    for (std::uint64_t n = 0; n <= 400; ++n) {
        CAPTURE(n);
        CHECK(t.twelve_times(n) == oracles::twelve_h(n));
    }
}

TEST_CASE("parity vanishing: H(n) = 0 for n = 1,2 mod 4") {
    const ClassNumberTable t = sieve_hurwitz(4000);
    for (std::uint64_t n = 1; n <= 4000; ++n)
        if (n % 4 == 1 || n % 4 == 2) CHECK(t.twelve_times(n) == 0);
}

TEST_CASE("sieve output independent of thread count") {
    const ClassNumberTable a = sieve_hurwitz(50000, 1);
    const ClassNumberTable b = sieve_hurwitz(50000, 5);
    REQUIRE(a.limit() == b.limit());
    for (std::uint64_t n = 0; n <= a.limit(); ++n) REQUIRE(a.raw()[n] == b.raw()[n]);
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(sieve_hurwitz(2'000'000'000'000ull), CapacityError);
}

TEST_CASE("primitive class numbers") {
    CHECK(primitive_class_number(12) == 1); // only (1,0,3)
    CHECK(primitive_class_number(15) == 2); // (1,1,4), (2,1,2)
    CHECK(primitive_class_number(7) == 1);
    CHECK(primitive_class_number(3) == 1);
    CHECK(primitive_class_number(4) == 1);
    CHECK(primitive_class_number(5) == 0);
    for (std::uint64_t n = 1; n <= 400; ++n) {
        CAPTURE(n);
        CHECK(primitive_class_number(n) == oracles::primitive_count(n));
    }
}

TEST_CASE("total class numbers") {
    CHECK(total_class_number(12) == 2); // htilde(-12) + htilde(-3)
    CHECK(total_class_number(16) == 2); // htilde(-16) + htilde(-4)
    CHECK(total_class_number(5) == 0);
    CHECK(total_class_number(3) == 1);
}

TEST_CASE("primitive table matches the single-value count") {
    const PrimitiveClassTable t = sieve_primitive(2000);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(t.count(n) == primitive_class_number(n));
    }
    const PrimitiveClassTable t3 = sieve_primitive(2000, 3);
    for (std::uint64_t n = 0; n <= 2000; ++n) REQUIRE(t3.raw()[n] == t.raw()[n]);
}

TEST_CASE("weighted reassembly of H from primitive counts") {
    // 12 H(n) = sum over f^2 | n with n/f^2 = 0,3 mod 4 of w(n/f^2) htilde(-n/f^2),
    // w(3) = 4, w(4) = 6, 12 otherwise
    const ClassNumberTable t = sieve_hurwitz(3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        std::int64_t sum = 0;
        for (std::uint64_t f = 1; f * f <= n; ++f) {
            if (n % (f * f) != 0) continue;
            const std::uint64_t k = n / (f * f);
            const std::int64_t w = k == 3 ? 4 : (k == 4 ? 6 : 12);
            sum += w * static_cast<std::int64_t>(primitive_class_number(k));
        }
        CAPTURE(n);
        CHECK(t.twelve_times(n) == sum);
    }
}

TEST_CASE("r2 and r3 tables against brute force") {
    const auto r3 = r3_table(2000);
    CHECK(r3[0] == 1);
    CHECK(r3[3] == 8);  // (+-1,+-1,+-1)
    CHECK(r3[4] == 6);
    CHECK(r3[7] == 0);  // 7 = 7 mod 8
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(r3[n] == oracles::r3(n));
    }
    const auto r2 = r2_table(100);
    CHECK(r2[0] == 1);
    CHECK(r2[1] == 4);
    CHECK(r2[2] == 4);
    CHECK(r2[25] == 12);
}

TEST_CASE("growth constant stays below 2 across decades") {
    const ClassNumberTable t = sieve_hurwitz(1000000);
    double running = 0;
    std::uint64_t decade_lo = 1;
    for (std::uint64_t decade_hi = 10; decade_hi <= 1000000; decade_hi *= 10) {
        double local = 0;
        for (std::uint64_t n = decade_lo; n <= decade_hi; ++n) {
            const auto v = t.raw()[n];
            if (v == 0) continue;
            local = std::max(local, (v / 12.0) / (std::sqrt(double(n)) *
                                                  (1.0 + std::log(double(n)))));
        }
        const double prev = running;
        running = std::max(running, local);
        CHECK(running >= prev); // running max over decades is monotone
        CHECK(running <= 2.0);
        decade_lo = decade_hi + 1;
    }
    CHECK(hurwitz_growth_constant(t) == doctest::Approx(running).epsilon(1e-12));
    CHECK(hurwitz_growth_constant(t) <= 2.0);
}
