#pragma once

#include <cmath>

namespace twostop {

namespace detail {

template <class F>
double simpson_panel(F& f, double a, double fa, double b, double fb, double m,
                     double fm) {
    return (b - a) * (fa + 4.0 * fm + fb) / 6.0;
}

template <class F>
double adaptive_step(F& f, double a, double fa, double b, double fb, double m,
                     double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_panel(f, a, fa, m, fm, lm, flm);
    const double right = simpson_panel(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson integration of a smooth integrand on [a, b]. The
/// tolerance is absolute, floored at a small multiple of the integral's own
/// magnitude so that large-valued integrands (h grows like (1+1/alpha)^(1/alpha),
/// huge for small alpha) terminate at achievable precision.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-11,
                        int max_depth = 36) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = detail::simpson_panel(f, a, fa, b, fb, m, fm);
    const double tol_eff = std::fmax(tol, std::fabs(whole) * 1e-12);
    return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol_eff, max_depth);
}

/// Integrate q over [0, y] when q behaves like t^(1/alpha) near zero.
/// The initial segment is handled in the substituted variable t = u^alpha
/// (so the integrand u -> q(u^alpha) * alpha * u^(alpha-1) is smooth when
/// q(t) = t^(1/alpha) * smooth(t)); the remainder uses plain adaptive Simpson.
template <class F>
double integrate_power_law(F&& q, double y, double alpha, double tol = 1e-11) {
    if (y <= 0.0) return 0.0;
    const double split = std::fmin(1.0, y);
    const double u1 = std::pow(split, 1.0 / alpha);
    auto sub = [&](double u) {
        // q vanishes like t^(1/alpha) at 0, so the limit of the product is 0;
        // avoid 0 * inf when alpha < 1.
        if (u <= 0.0) return 0.0;
        return q(std::pow(u, alpha)) * alpha * std::pow(u, alpha - 1.0);
    };
    double total = adaptive_simpson(sub, 0.0, u1, tol);
    if (y > split) total += adaptive_simpson(q, split, y, tol);
    return total;
}

} // namespace twostop
