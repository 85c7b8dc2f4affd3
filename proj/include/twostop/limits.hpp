#pragma once

#include "twostop/alpha.hpp"

#include <vector>

namespace twostop {

/// Asymptotic constants for one shape parameter: the threshold root b_alpha,
/// d_alpha = h(b_alpha), the three scaled limits lim n F(V_n) for the
/// one-choice, two-choice, and prophet rules, their ratios, and the relative
/// improvement of the second choice over the prophet gap.
struct LimitConstants {
    double alpha;
    double b_alpha;
    double d_alpha;
    double one_choice_limit;   // 1 + 1/alpha
    double two_choice_limit;   // d_alpha^alpha
    double prophet_limit;      // Gamma(1 + 1/alpha)^alpha
    double ratio_one_two;
    double ratio_two_prophet;
    double ratio_one_prophet;
    double rel_improvement;
};

/// f(y) = (1 + alpha*y/(alpha+1))^(-1/alpha); f(0) = 1.
double f_limit(Alpha alpha, double y);

/// h(y) = y^(1/alpha) * f(y).
double h_limit(Alpha alpha, double y);

/// H(y) = integral_0^y h(u) du + (1/alpha - y) * h(y).
/// Adaptive quadrature, absolute tolerance 1e-11; the y^(1/alpha) cusp at 0
/// for alpha < 1 is removed by substitution on the initial segment.
double H_func(Alpha alpha, double y);

/// Root of H on (1/alpha, inf) plus every derived constant.
LimitConstants solve_b_alpha(Alpha alpha);

/// Distances of the computed constants to their limiting values as the shape
/// parameter runs to 0 or infinity.
enum class AsymptoteDirection { ToZero, ToInfinity };

struct AsymptoteRow {
    double alpha;
    double two_choice;
    double prophet;
    double improvement;
    double ratio_one_two;
    double ratio_two_prophet;
    double ratio_one_prophet;
    // gaps to the limiting values in the requested direction; entries with no
    // finite limit in that direction are NaN
    double gap_two_choice;
    double gap_prophet;
    double gap_improvement;
    double gap_ratio_one_two;
    double gap_ratio_two_prophet;
    double gap_ratio_one_prophet;
};

std::vector<AsymptoteRow> asymptote_check(AsymptoteDirection dir,
                                          const std::vector<double>& alphas);

} // namespace twostop
