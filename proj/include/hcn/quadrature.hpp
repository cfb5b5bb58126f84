#ifndef HCN_QUADRATURE_HPP
#define HCN_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

namespace hcn {

// Neumaier compensated accumulator. Residuals computed here are small differences
// of large partial sums, so plain += is not good enough.
template <class T>
struct CompensatedSum {
    T sum{};
    T comp{};

    void add(T x) {
        T t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    T value() const { return sum + comp; }
};

template <class Real>
struct CompensatedComplexSum {
    CompensatedSum<Real> re, im;
    void add(std::complex<Real> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<Real> value() const { return {re.value(), im.value()}; }
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], generated at the precision of Real by
// Newton iteration on P_n. Keeps the integrator usable in long double, where no
// tabulated 16-digit constants would suffice.
template <class Real>
struct GaussLegendreRule {
    std::vector<Real> node, weight;

    explicit GaussLegendreRule(int n) {
        node.resize(n);
        weight.resize(n);
        const Real pi = Real(3.14159265358979323846264338327950288L);
        for (int i = 0; i < (n + 1) / 2; ++i) {
            Real x = std::cos(pi * (Real(i) + Real(0.75L)) / (Real(n) + Real(0.5L)));
            Real dp = 0;
            for (int it = 0; it < 100; ++it) {
                Real p0 = 1, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                Real dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) <= std::abs(x) * std::numeric_limits<Real>::epsilon() * 4)
                    break;
            }
            node[i] = -x;
            node[n - 1 - i] = x;
            weight[i] = weight[n - 1 - i] = 2 / ((1 - x * x) * dp * dp);
        }
    }
};

template <class Real>
const GaussLegendreRule<Real>& gl_rule(int n) {
    static const GaussLegendreRule<Real> r15(15);
    static const GaussLegendreRule<Real> r31(31);
    return n == 15 ? r15 : r31;
}

} // namespace detail

template <class V, class Real>
struct IntegrationResult {
    V value{};
    Real error_estimate{};
    bool converged = false;
    std::size_t evaluations = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    std::size_t max_panels = 20000;
};

/// Globally adaptive panel integration of f over [a,b] with a nested 15/31-point
/// Gauss pair: panels live in a max-heap on their error estimate and the worst one
/// is bisected until  sum(err) <= max(abs_tol, rel_tol*|I|, roundoff floor).
/// Interior knots seed the initial panel boundaries (integrand scale changes).
template <class Real, class F>
auto integrate_adaptive(F&& f, Real a, Real b, const QuadratureOptions& opt = {},
                        std::span<const Real> knots = {}) {
    using V = std::invoke_result_t<F, Real>;
    struct Panel {
        Real a, b, err;
        V val;
        Real absval;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    auto eval_panel = [&](Real lo, Real hi) {
        const auto& g15 = detail::gl_rule<Real>(15);
        const auto& g31 = detail::gl_rule<Real>(31);
        Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
        V i15{}, i31{};
        Real l1 = 0;
        for (int i = 0; i < 15; ++i)
            i15 += f(mid + half * g15.node[i]) * (half * g15.weight[i]);
        for (int i = 0; i < 31; ++i) {
            V t = f(mid + half * g31.node[i]) * (half * g31.weight[i]);
            i31 += t;
            l1 += std::abs(t);
        }
        return Panel{lo, hi, std::abs(i31 - i15), i31, l1};
    };

    std::priority_queue<Panel> heap;
    std::size_t evals = 0;
    Real total_err = 0, total_abs = 0;
    V running{};
    auto push = [&](Panel p) {
        total_err += p.err;
        total_abs += p.absval;
        running += p.val;
        heap.push(std::move(p));
    };

    Real prev = a;
    for (Real k : knots) {
        if (k > prev && k < b) {
            push(eval_panel(prev, k));
            evals += 46;
            prev = k;
        }
    }
    push(eval_panel(prev, b));
    evals += 46;

    auto tolerance = [&](Real value_mag) {
        Real floor = 8 * std::numeric_limits<Real>::epsilon() * total_abs;
        Real tol = Real(opt.abs_tol);
        if (Real(opt.rel_tol) * value_mag > tol) tol = Real(opt.rel_tol) * value_mag;
        if (floor > tol) tol = floor;
        return tol;
    };

    while (heap.size() < opt.max_panels && total_err > tolerance(std::abs(running))) {
        Panel worst = heap.top();
        Real mid = (worst.a + worst.b) / 2;
        if (mid <= worst.a || mid >= worst.b) break; // interval at resolution limit
        heap.pop();
        total_err -= worst.err;
        total_abs -= worst.absval;
        running -= worst.val;
        push(eval_panel(worst.a, mid));
        push(eval_panel(mid, worst.b));
        evals += 92;
    }

    // Final value recomputed once, compensated, from the surviving panels.
    CompensatedSum<Real> re, im;
    while (!heap.empty()) {
        if constexpr (std::is_same_v<V, Real>) {
            re.add(heap.top().val);
        } else {
            re.add(heap.top().val.real());
            im.add(heap.top().val.imag());
        }
        heap.pop();
    }
    V value;
    if constexpr (std::is_same_v<V, Real>)
        value = re.value();
    else
        value = V(re.value(), im.value());

    IntegrationResult<V, Real> out;
    out.value = value;
    out.error_estimate = total_err;
    out.converged = total_err <= tolerance(std::abs(value));
    out.evaluations = evals;
    return out;
}

// Closed-form least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

} // namespace hcn

#endif
