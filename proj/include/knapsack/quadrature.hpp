#pragma once

#include <cmath>
#include <functional>

namespace knapsack {

// Adaptive Simpson integration with absolute tolerance.
// The recursion depth bound keeps runaway subdivision in check; integrands
// used in this library are smooth away from isolated endpoints.
namespace detail {

template <typename F>
double simpson_rec(const F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol = 1e-10, int max_depth = 48) {
    if (!(a < b)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

// Solve g(x) = y for a non-decreasing g on [lo, hi] by bisection, then polish
// with Newton steps when a derivative is supplied. Returns the abscissa to an
// absolute tolerance of xtol.
template <typename G, typename DG>
double invert_monotone(const G& g, const DG& dg, double y, double lo, double hi,
                       double xtol = 1e-13) {
    double flo = g(lo) - y;
    if (flo >= 0.0) return lo;
    double a = lo, b = hi;
    while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;  // ran out of float resolution
        if (g(m) - y <= 0.0)
            a = m;
        else
            b = m;
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 3; ++it) {
        const double d = dg(x);
        if (!(d > 0.0)) break;
        double step = (g(x) - y) / d;
        double nx = x - step;
        if (nx < lo) nx = lo;
        if (nx > hi) nx = hi;
        x = nx;
        if (std::fabs(step) < 0.25 * xtol) break;
    }
    return x;
}

}  // namespace knapsack
