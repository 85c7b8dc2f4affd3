#include "twostop/dp.hpp"

#include "twostop/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace twostop {

GnGrid GnGrid::make(Alpha alpha, std::size_t grid_size) {
    const double a = alpha.value();
    const double p = std::fmax(1.0, 3.0 / a);
    GnGrid grid;
    grid.alpha = a;
    grid.n = 1;
    grid.xs.resize(grid_size);
    grid.us.resize(grid_size);
    grid.gvals.resize(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i)
        grid.xs[i] = std::pow(static_cast<double>(i + 1) / static_cast<double>(grid_size), p);
    grid.xs.back() = 1.0;
    kernels::pow_array(grid.xs, grid.us, a);
    for (std::size_t i = 0; i < grid_size; ++i) grid.gvals[i] = g1(alpha, grid.xs[i]);
    return grid;
}

void GnGrid::advance() {
    kernels::iterate_map(gvals, alpha);
    ++n;
}

double g1(Alpha alpha, double x) {
    const double p = alpha.value() + 1.0;
    return x - std::pow(x, p) / p;
}

double iterate_g(Alpha alpha, double x, int n) {
    const double p = alpha.value() + 1.0;
    double v = x;
    for (int k = 0; k < n; ++k) v -= std::pow(v, p) / p;
    return v;
}

double v2_exact(Alpha alpha) {
    const double a = alpha.value();
    // integral_0^1 (1 - x^a)^2 dx
    return 1.0 - 2.0 / (a + 1.0) + 1.0 / (2.0 * a + 1.0);
}

double solve_threshold(const GnGrid& grid, double v) {
    const auto& g = grid.gvals;
    const auto it = std::lower_bound(g.begin(), g.end(), v);
    const std::size_t k = static_cast<std::size_t>(it - g.begin());
    if (k == 0)
        throw GridResolutionError(grid.n,
                                  "threshold below first grid point at stage " +
                                      std::to_string(grid.n));
    if (k == g.size())
        throw GridResolutionError(grid.n, "threshold above grid range at stage " +
                                              std::to_string(grid.n));
    const double x0 = grid.xs[k - 1], x1 = grid.xs[k];
    const double g0 = g[k - 1], g1v = g[k];
    return x0 + (v - g0) * (x1 - x0) / (g1v - g0);
}

namespace {

// integral_0^b g_n(x) * alpha * x^(alpha-1) dx in the transformed variable
// u = x^alpha, where du makes the weight exact: trapezoid over grid cells
// below b, an initial panel from (0,0), and an endpoint panel closed with the
// exact value g_n(b) = v.
double integral_below(const GnGrid& grid, double b, double v) {
    const auto& g = grid.gvals;
    const auto& u = grid.us;
    const auto it = std::lower_bound(g.begin(), g.end(), v);
    const std::size_t k = static_cast<std::size_t>(it - g.begin());
    const double ub = std::pow(b, grid.alpha);
    if (k == 0) return 0.5 * ub * v;
    double acc = 0.5 * u[0] * g[0];
    acc += kernels::trapezoid(std::span<const double>(u.data(), k),
                              std::span<const double>(g.data(), k));
    acc += 0.5 * (ub - u[k - 1]) * (g[k - 1] + v);
    return acc;
}

} // namespace

std::vector<DpTrace> dp_sweep(Alpha alpha, int N, std::size_t grid_size,
                              const StageObserver& observer) {
    const double inv = alpha.inv();
    GnGrid grid = GnGrid::make(alpha, grid_size);
    grid.advance();  // stage 2
    double V = v2_exact(alpha);

    std::vector<DpTrace> trace;
    trace.reserve(static_cast<std::size_t>(N - 1));
    for (int n = 2; n <= N; ++n) {
        const double v1 = grid.gvals.back();
        const double b = solve_threshold(grid, V);
        const double scale = std::pow(static_cast<double>(n), inv);
        trace.push_back({n, v1, V, b, scale * V, scale * b});
        if (observer) observer(grid, trace.back());
        if (n == N) break;
        V = integral_below(grid, b, V) + (1.0 - std::pow(b, grid.alpha)) * V;
        grid.advance();
    }
    return trace;
}

FnHnSamples fn_hn(const GnGrid& grid) {
    const double inv = 1.0 / grid.alpha;
    const double n = static_cast<double>(grid.n);
    FnHnSamples s;
    const std::size_t m = grid.xs.size();
    s.y.resize(m);
    s.f.resize(m);
    s.h.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        s.y[i] = n * grid.us[i];
        s.f[i] = grid.gvals[i] / grid.xs[i];
        s.h[i] = std::pow(s.y[i], inv) * s.f[i];
    }
    return s;
}

OneChoiceValues one_choice_values(Alpha alpha, int N) {
    const double p = alpha.value() + 1.0;
    const double inv = alpha.inv();
    OneChoiceValues out;
    out.v1.resize(static_cast<std::size_t>(N));
    out.scaled.resize(static_cast<std::size_t>(N));
    double v = 1.0;
    for (int k = 1; k <= N; ++k) {
        v -= std::pow(v, p) / p;
        out.v1[static_cast<std::size_t>(k - 1)] = v;
        out.scaled[static_cast<std::size_t>(k - 1)] =
            std::pow(static_cast<double>(k), inv) * v;
    }
    return out;
}

} // namespace twostop
