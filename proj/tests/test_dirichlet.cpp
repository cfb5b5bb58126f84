#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hcn/class_numbers.hpp"
#include "hcn/dirichlet.hpp"
#include "hcn/errors.hpp"
#include "hcn/quadrature.hpp"

using namespace hcn;
using C = std::complex<double>;

namespace {
const ClassNumberTable& table1m() {
    static const ClassNumberTable t = sieve_hurwitz(1000010);
    return t;
}
} // namespace

TEST_CASE("smooth weight family") {
    const SmoothWeightSpec spec;
    CHECK(spec.weight(1.0) == 1.0);
    CHECK(spec.weight(std::exp(1.0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(spec.support_radius() == doctest::Approx(std::exp(6.1)).epsilon(1e-14));
    CHECK_THROWS_AS(spec.weight(0.0), DomainError);
    CHECK_THROWS_AS(spec.weight(-1.0), DomainError);

    SmoothWeightSpec other;
    other.family = "top-hat";
    CHECK_THROWS_AS(other.weight(1.0), UnsupportedFamilyError);
    CHECK_THROWS_AS(mellin_W(other, C(2, 0)), UnsupportedFamilyError);
}

TEST_CASE("Mellin transform: closed form versus quadrature") {
    const SmoothWeightSpec spec;
    CHECK(mellin_W(spec, C(0, 0)).real() ==
          doctest::Approx((1.0 / std::numbers::inv_sqrtpi)).epsilon(1e-14));
    CHECK(mellin_W(spec, C(2, 0)).real() == doctest::Approx(4.8180290946987221).epsilon(1e-12));
    CHECK(mellin_W(spec, C(1.5, 0)).real() ==
          doctest::Approx(3.1107533852789406).epsilon(1e-12));

    // oracle: int_0^inf x^{s-1} w(x) dx = int_-9^9 e^{su - u^2} du to 1e-10
    for (const C s : {C(0, 0), C(1, 0), C(1.5, 0), C(2, 0), C(2, 3)}) {
        QuadratureOptions opt;
        opt.rel_tol = 1e-13;
        const auto ref = integrate_adaptive<double>(
            [&](double u) {
                const C v = std::exp(s * u - u * u);
                return v.real();
            },
            -9.0, 9.0, opt);
        const auto ref_im = integrate_adaptive<double>(
            [&](double u) {
                const C v = std::exp(s * u - u * u);
                return v.imag();
            },
            -9.0, 9.0, opt);
        const C w = mellin_W(spec, s);
        CAPTURE(s.real());
        CAPTURE(s.imag());
        CHECK(std::abs(w - C(ref.value, ref_im.value)) <= 1e-10 * (1 + std::abs(w)));
    }

    // evenness on a complex grid
    for (const C s : {C(1, 2), C(0.5, -3), C(2, 3)})
        CHECK(std::abs(mellin_W(spec, s) - mellin_W(spec, -s)) < 1e-13);
}

TEST_CASE("truncated Dirichlet series: domain and vanishing") {
    CHECK_THROWS_AS(truncated_dirichlet(1, C(1.5, 0), 100, table1m()), DomainError);
    CHECK_THROWS_AS(truncated_dirichlet(1, C(2, 0), 2000000, table1m()), RangeError);
    const TruncatedSeriesValue v = truncated_dirichlet(2, C(3, 0), 100000, table1m());
    CHECK(v.value == C(0, 0));
    CHECK(v.tail_bound == 0.0);
}

TEST_CASE("truncated Dirichlet series: tails certify self-consistency") {
    const double growth = hurwitz_growth_constant(table1m());
    for (const std::uint64_t ell : {1ull, 3ull, 8ull}) {
        for (const C s : {C(2, 0), C(3, 0), C(2, 5)}) {
            const auto v1 = truncated_dirichlet(ell, s, 100000, table1m(), growth);
            const auto v2 = truncated_dirichlet(ell, s, 1000000, table1m(), growth);
            CAPTURE(ell);
            CAPTURE(s.real());
            CHECK(v2.tail_bound < v1.tail_bound);
            CHECK(std::abs(v2.value - v1.value) <= v1.tail_bound);
        }
    }
}

TEST_CASE("truncated Dirichlet series: Richardson-extrapolated limit within tail bound") {
    // partial-sum error at real s decays like N^{3/2 - s} here, so one Richardson
    // step from N, 2N, 4N estimates the limit to higher order
    const double growth = hurwitz_growth_constant(table1m());
    const C s(3, 0);
    const double beta = 1.5 - 3.0;
    const auto sN = truncated_dirichlet(1, s, 250000, table1m(), growth);
    const auto s2N = truncated_dirichlet(1, s, 500000, table1m(), growth);
    const auto s4N = truncated_dirichlet(1, s, 1000000, table1m(), growth);
    const double r = std::pow(2.0, beta);
    const C limit = s4N.value + (s4N.value - s2N.value) * (r / (1.0 - r));
    CHECK(std::abs(s4N.value - limit) <= s4N.tail_bound);
    CHECK(std::abs(s2N.value - limit) <= s2N.tail_bound);
    CHECK(std::abs(sN.value - limit) <= sN.tail_bound);
    // and the tail bound is not hopelessly loose at this scale
    CHECK(s4N.tail_bound < 1e-3);
}

TEST_CASE("truncated Dirichlet series: terms counted") {
    const auto v = truncated_dirichlet(1, C(2, 0), 1000, table1m());
    // only n = 3 mod 4 contribute for l = 1
    CHECK(v.terms_used > 200);
    CHECK(v.terms_used <= 250);
}
