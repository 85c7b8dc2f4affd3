#include "twostop/dp.hpp"

#include "twostop/limits.hpp"
#include "twostop/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace twostop;

TEST_CASE("g map basics") {
    const Alpha a1{1.0};
    CHECK(g1(a1, 1.0) == doctest::Approx(0.5));
    CHECK(g1(a1, 0.0) == 0.0);
    CHECK(g1(Alpha{2.0}, 1.0) == doctest::Approx(2.0 / 3.0));

    CHECK(iterate_g(a1, 1.0, 1) == doctest::Approx(0.5));
    CHECK(iterate_g(a1, 1.0, 3) == doctest::Approx(39.0 / 128.0).epsilon(1e-15));
}

TEST_CASE("one-choice scaled limit") {
    // n F(V_n^1) -> 1 + 1/alpha
    for (double a : {0.5, 1.0, 2.0}) {
        const double v = iterate_g(Alpha{a}, 1.0, 10000);
        CHECK(10000.0 * std::pow(v, a) ==
              doctest::Approx(1.0 + 1.0 / a).epsilon(5e-3));
    }
}

TEST_CASE("two-draw closed form") {
    CHECK(v2_exact(Alpha{1.0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    for (double a : {0.4, 1.0, 3.0}) {
        const double quad = adaptive_simpson(
            [&](double x) { return std::pow(1.0 - std::pow(x, a), 2.0); }, 0.0,
            1.0, 1e-12);
        CHECK(v2_exact(Alpha{a}) == doctest::Approx(quad).epsilon(1e-10));
    }
}

TEST_CASE("early thresholds and values") {
    const auto trace = dp_sweep(Alpha{1.0}, 3, 4096);
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].n == 2);
    CHECK(trace[0].v2 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // root of g(g(b)) = 1/3, from an independent high-precision solve
    CHECK(trace[0].b == doctest::Approx(0.6066801068096712).epsilon(1e-6));
    CHECK(trace[1].v1 == doctest::Approx(39.0 / 128.0).epsilon(1e-12));
    // V_3^2 from 3-variable quadrature of the policy payoff
    CHECK(trace[1].v2 == doctest::Approx(0.2555842302013828).epsilon(1e-6));
}

TEST_CASE("trace invariants over a medium sweep") {
    const Alpha a{1.0};
    const int N = 500;
    const auto trace = dp_sweep(a, N, 2048);
    const auto oc = one_choice_values(a, 2 * N);

    double prev_b = 1.0;
    for (const DpTrace& t : trace) {
        CHECK(t.v2 <= t.v1 + 1e-12);
        CHECK(t.b <= prev_b + 1e-12);            // thresholds non-increasing
        CHECK(t.b >= t.v1 - 1e-12);              // threshold above one-choice value
        CHECK(t.v2 > oc.v1[static_cast<std::size_t>(2 * t.n - 1)]);  // beats 2n one-choice
        prev_b = t.b;
    }

    // prophet value E min = integral (1-x^a)^n <= V_n^2 at a few stages
    for (int n : {5, 50, 400}) {
        const double vp = adaptive_simpson(
            [&](double x) {
                return std::pow(1.0 - std::pow(x, a.value()),
                                static_cast<double>(n));
            },
            0.0, 1.0, 1e-12);
        CHECK(vp <= trace[static_cast<std::size_t>(n - 2)].v2 + 1e-10);
    }
}

TEST_CASE("scaled identity W = h_n(B^alpha)") {
    const Alpha a{1.0};
    GnGrid grid = GnGrid::make(a, 2048);
    grid.advance();
    double V = v2_exact(a);
    for (int n = 2; n < 60; ++n) {
        const double b = solve_threshold(grid, V);
        const FnHnSamples s = fn_hn(grid);
        // locate y = n b^alpha between samples and interpolate h_n
        const double y = n * std::pow(b, a.value());
        std::size_t k = 0;
        while (k < s.y.size() && s.y[k] < y) ++k;
        REQUIRE(k > 0);
        REQUIRE(k < s.y.size());
        const double t = (y - s.y[k - 1]) / (s.y[k] - s.y[k - 1]);
        const double hn = s.h[k - 1] + t * (s.h[k] - s.h[k - 1]);
        CHECK(hn == doctest::Approx(n * std::pow(static_cast<double>(n),
                                                 a.inv() - 1.0) *
                                    V)
                        .epsilon(1e-4));
        // advance by hand, mirroring the sweep
        const auto trace = dp_sweep(a, n + 1, 2048);
        V = trace.back().v2;
        grid.advance();
    }
}

TEST_CASE("fn hn sampled shapes") {
    const Alpha a{1.0};
    GnGrid grid = GnGrid::make(a, 1024);
    const FnHnSamples s1 = fn_hn(grid);
    // f_1(y) = 1 - y/2 for alpha=1
    for (std::size_t i = 0; i < s1.y.size(); i += 100)
        CHECK(s1.f[i] == doctest::Approx(1.0 - s1.y[i] / 2.0).epsilon(1e-12));
    // h_n(n) = n^(1/alpha) g_n(1)
    for (int k = 0; k < 5; ++k) grid.advance();
    const FnHnSamples s = fn_hn(grid);
    CHECK(s.h.back() ==
          doctest::Approx(std::pow(6.0, a.inv()) * grid.gvals.back())
              .epsilon(1e-12));
}

TEST_CASE("threshold solver error path") {
    const Alpha a{1.0};
    GnGrid grid = GnGrid::make(a, 64);
    CHECK_THROWS_AS(solve_threshold(grid, 1e-12), GridResolutionError);
    CHECK_THROWS_AS(solve_threshold(grid, 0.9), GridResolutionError);
    try {
        solve_threshold(grid, 1e-12);
    } catch (const GridResolutionError& e) {
        CHECK(e.stage == 1);
    }
}
