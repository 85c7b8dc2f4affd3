#pragma once

#include <cmath>
#include <stdexcept>

namespace twostop {

/// Bisection on a sign change. The caller supplies a bracket [lo, hi] with
/// f(lo) and f(hi) of opposite sign (zero at an endpoint returns that
/// endpoint). Converges to |hi - lo| <= tol.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 1e-12) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: endpoints do not bracket a root");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // ran out of precision
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Expand [lo, hi] upward (doubling the width) until f changes sign, then
/// bisect. Used for roots whose rough location is known only from below.
template <class F>
double bisect_expanding(F&& f, double lo, double hi, double tol = 1e-12,
                        int max_doublings = 64) {
    double flo = f(lo);
    double fhi = f(hi);
    int k = 0;
    while ((flo > 0.0) == (fhi > 0.0) && fhi != 0.0 && k++ < max_doublings) {
        const double w = hi - lo;
        lo = hi;
        flo = fhi;
        hi += 2.0 * w;
        fhi = f(hi);
    }
    return bisect(f, lo, hi, tol);
}

} // namespace twostop
