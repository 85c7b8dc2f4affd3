#pragma once

#include "twostop/alpha.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace twostop {

/// Grid representation of the iterated map g_n on (0,1]. The update law acts
/// pointwise at fixed abscissae, so advancing the stage never re-interpolates;
/// the grid only affects quadrature and threshold accuracy.
struct GnGrid {
    double alpha;
    int n;                      // stage: gvals holds g_n at xs
    std::vector<double> xs;     // strictly increasing, last point is 1
    std::vector<double> us;     // xs^alpha, cached for the quadrature
    std::vector<double> gvals;

    static GnGrid make(Alpha alpha, std::size_t grid_size);
    void advance();             // g_n -> g_{n+1}
};

/// Per-stage record of the two-choice sweep.
struct DpTrace {
    int n;
    double v1;       // one-choice value, g_n(1)
    double v2;       // two-choice value
    double b;        // indifference threshold, g_n(b) = v2
    double w;        // n^(1/alpha) * v2
    double bscaled;  // n^(1/alpha) * b
};

struct GridResolutionError : std::runtime_error {
    int stage;
    GridResolutionError(int stage_, const std::string& what)
        : std::runtime_error(what), stage(stage_) {}
};

/// g(x) = x - x^(alpha+1)/(alpha+1) = E[X ^ x] for the pure member.
double g1(Alpha alpha, double x);

/// n-fold iterate of g1 at a point; equals the one-choice value with
/// guarantee x.
double iterate_g(Alpha alpha, double x, int n);

/// E[X2 ^ X1] = integral_0^1 (1 - x^alpha)^2 dx in closed form.
double v2_exact(Alpha alpha);

/// Threshold b with g_n(b) = v, by binary search over the monotone grid plus
/// linear interpolation inside the bracketing cell. Throws GridResolutionError
/// when v falls below the first grid value.
double solve_threshold(const GnGrid& grid, double v);

/// Full two-choice sweep for stages n = 2..N. The optional observer sees the
/// grid and the trace record at every stage, before the grid advances.
using StageObserver = std::function<void(const GnGrid&, const DpTrace&)>;
std::vector<DpTrace> dp_sweep(Alpha alpha, int N, std::size_t grid_size,
                              const StageObserver& observer = {});

/// Scaled samples of f_n and h_n at y = n * x^alpha over the grid:
/// f_n(y) = g_n(x)/x, h_n(y) = y^(1/alpha) * f_n(y).
struct FnHnSamples {
    std::vector<double> y;
    std::vector<double> f;
    std::vector<double> h;
};
FnHnSamples fn_hn(const GnGrid& grid);

/// One-choice values V_k^1 for k = 1..N (no grid needed) and the scaled
/// thresholds A_k = k^(1/alpha) * V_k^1 used by the moment recursion.
struct OneChoiceValues {
    std::vector<double> v1;      // v1[k-1] = V_k^1
    std::vector<double> scaled;  // scaled[k-1] = k^(1/alpha) * V_k^1
};
OneChoiceValues one_choice_values(Alpha alpha, int N);

} // namespace twostop
