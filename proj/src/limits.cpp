#include "twostop/limits.hpp"

#include "twostop/quadrature.hpp"
#include "twostop/roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace twostop {

double f_limit(Alpha alpha, double y) {
    const double a = alpha.value();
    return std::pow(1.0 + a * y / (a + 1.0), -1.0 / a);
}

double h_limit(Alpha alpha, double y) {
    if (y <= 0.0) return 0.0;
    return std::pow(y, alpha.inv()) * f_limit(alpha, y);
}

double H_func(Alpha alpha, double y) {
    if (y <= 0.0) return 0.0;
    const double integral =
        integrate_power_law([&](double u) { return h_limit(alpha, u); }, y,
                            alpha.value(), 1e-11);
    return integral + (alpha.inv() - y) * h_limit(alpha, y);
}

LimitConstants solve_b_alpha(Alpha alpha) {
    const double a = alpha.value();
    const double inv = alpha.inv();

    // H rises on (0, 1/alpha), falls afterwards toward -inf, so the unique
    // root sits right of 1/alpha; expand the upper endpoint until H < 0.
    const double lo = inv + 1e-6;
    const double hi0 = std::fmax(2.0 * (1.0 + inv), 4.0);
    const double b = bisect_expanding([&](double y) { return H_func(alpha, y); },
                                      lo, hi0, 1e-10);

    LimitConstants c{};
    c.alpha = a;
    c.b_alpha = b;
    c.d_alpha = h_limit(alpha, b);
    c.one_choice_limit = 1.0 + inv;
    c.two_choice_limit = std::pow(c.d_alpha, a);
    c.prophet_limit = std::pow(std::tgamma(1.0 + inv), a);
    c.ratio_one_two = c.one_choice_limit / c.two_choice_limit;
    c.ratio_two_prophet = c.two_choice_limit / c.prophet_limit;
    c.ratio_one_prophet = c.one_choice_limit / c.prophet_limit;
    // the values behave like n^(-1/alpha) * (limit)^(1/alpha), so the
    // improvement ratio uses the 1/alpha-th powers of the column limits
    const double c1 = std::pow(c.one_choice_limit, inv);
    const double c2 = std::pow(c.two_choice_limit, inv);
    const double c5 = std::pow(c.prophet_limit, inv);
    c.rel_improvement = (c1 - c2) / (c1 - c5);
    return c;
}

std::vector<AsymptoteRow> asymptote_check(AsymptoteDirection dir,
                                          const std::vector<double>& alphas) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const double e = std::numbers::e;
    const double gamma = std::numbers::egamma;

    std::vector<AsymptoteRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        const LimitConstants c = solve_b_alpha(Alpha{a});
        AsymptoteRow r{};
        r.alpha = a;
        r.two_choice = c.two_choice_limit;
        r.prophet = c.prophet_limit;
        r.improvement = c.rel_improvement;
        r.ratio_one_two = c.ratio_one_two;
        r.ratio_two_prophet = c.ratio_two_prophet;
        r.ratio_one_prophet = c.ratio_one_prophet;
        if (dir == AsymptoteDirection::ToInfinity) {
            r.gap_two_choice = std::fabs(r.two_choice - (1.0 - 1.0 / e));
            r.gap_prophet = std::fabs(r.prophet - std::exp(-gamma));
            r.gap_improvement =
                std::fabs(r.improvement - (1.0 - std::log(e - 1.0)) / gamma);
            r.gap_ratio_one_two = nan;
            r.gap_ratio_two_prophet = nan;
            r.gap_ratio_one_prophet = nan;
        } else {
            r.gap_two_choice = nan;
            r.gap_prophet = nan;
            r.gap_improvement = std::fabs(r.improvement - 1.0);
            r.gap_ratio_one_two = std::fabs(r.ratio_one_two - 2.0);
            r.gap_ratio_two_prophet = std::fabs(r.ratio_two_prophet - e / 2.0);
            r.gap_ratio_one_prophet = std::fabs(r.ratio_one_prophet - e);
        }
        rows.push_back(r);
    }
    return rows;
}

} // namespace twostop
