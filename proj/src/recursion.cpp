#include "twostop/recursion.hpp"

#include "twostop/limits.hpp"
#include "twostop/quadrature.hpp"
#include "twostop/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twostop {

double QFunction::inverse(double t, double ymax) const {
    if (t <= 0.0) return 0.0;
    if (eval(ymax) <= t) return ymax;
    return bisect([&](double y) { return eval(y) - t; }, 0.0, ymax, 1e-12);
}

double QFunction::integral_to(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= cache_s_ && cache_s_ > 0.0) {
        cache_i_ += adaptive_simpson([this](double y) { return eval(y); }, cache_s_,
                                     s, 1e-11);
        cache_s_ = s;
        return cache_i_;
    }
    // first call, or a backward jump: restart from zero with the cusp handled
    cache_i_ = integrate_power_law([this](double y) { return eval(y); }, s, alpha_,
                                   1e-11);
    cache_s_ = s;
    return cache_i_;
}

namespace {

class PowerQ final : public QFunction {
public:
    explicit PowerQ(Alpha a) : QFunction(a.value()) {}
    double eval(double y) const override {
        return y <= 0.0 ? 0.0 : std::pow(y, 1.0 / alpha_);
    }
    double inverse(double t, double ymax) const override {
        if (t <= 0.0) return 0.0;
        const double y = std::pow(t, alpha_);
        return y < ymax ? y : ymax;
    }
    double integral_to(double s) const override {
        if (s <= 0.0) return 0.0;
        const double p = 1.0 + 1.0 / alpha_;
        return std::pow(s, p) / p;
    }
};

class LimitQ final : public QFunction {
public:
    explicit LimitQ(Alpha a) : QFunction(a.value()), a_(a) {}
    double eval(double y) const override { return h_limit(a_, y); }

private:
    Alpha a_;
};

class SandwichQ final : public QFunction {
public:
    SandwichQ(Alpha a, int j, double A)
        : QFunction(a.value()), a_(a), j_(j), A_(A) {
        plateau_ = raw(A);
    }
    double eval(double y) const override {
        if (y <= 0.0) return 0.0;
        if (y >= A_) return plateau_;
        return raw(y);
    }
    double inverse(double t, double ymax) const override {
        if (t >= plateau_) return std::fmin(A_, ymax);
        return QFunction::inverse(t, std::fmin(ymax, A_));
    }
    double plateau() const { return plateau_; }
    double cap() const { return A_; }

private:
    double raw(double y) const {
        return std::pow(y, 1.0 / alpha_) *
               (f_limit(a_, y) - y / (2.0 * static_cast<double>(j_)));
    }
    Alpha a_;
    int j_;
    double A_;
    double plateau_;
};

} // namespace

std::shared_ptr<QFunction> q_power(Alpha alpha) {
    return std::make_shared<PowerQ>(alpha);
}

std::shared_ptr<QFunction> q_scaling_limit(Alpha alpha) {
    return std::make_shared<LimitQ>(alpha);
}

std::shared_ptr<QFunction> q_sandwich(Alpha alpha, int j, double A) {
    if (j <= 0) throw std::invalid_argument("q_sandwich: j must be positive");
    if (A <= 0.0) throw std::invalid_argument("q_sandwich: cap must be positive");
    return std::make_shared<SandwichQ>(alpha, j, A);
}

bool sandwich_monotone(Alpha alpha, int j, double A, int samples) {
    const SandwichQ q(alpha, j, A);
    double prev = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double y = A * static_cast<double>(i) / static_cast<double>(samples);
        const double v = q.eval(y);
        if (v <= prev) return false;
        prev = v;
    }
    return true;
}

bool sandwich_admissible(Alpha alpha, int j, double A, int samples) {
    if (!sandwich_monotone(alpha, j, A, samples)) return false;
    // root functional negative at the cap, so the root of
    // K_j(y) = integral_0^y k_j + (1/alpha - y) k_j(y) sits inside (1/alpha, A)
    const SandwichQ q(alpha, j, A);
    const double K_A = q.integral_to(A) + (alpha.inv() - A) * q.eval(A);
    return K_A < 0.0;
}

int smallest_admissible_j(Alpha alpha, double A, int j_hi) {
    if (!sandwich_admissible(alpha, j_hi, A)) return -1;
    int lo = 1, hi = j_hi;  // invariant: hi admissible
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (sandwich_admissible(alpha, mid, A))
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

RecursionState step(const RecursionSpec& spec, const RecursionState& state) {
    const double n = static_cast<double>(state.n);
    const double inv = spec.alpha.inv();
    const QFunction& q = *spec.q;
    double integral;
    if (state.z >= q.eval(n)) {
        integral = q.integral_to(n);
    } else {
        const double s = q.inverse(state.z, n);
        integral = q.integral_to(s) + (n - s) * state.z;
    }
    const double z = std::pow((n + 1.0) / n, inv) * integral / n;
    if (!(z > 0.0))
        throw std::runtime_error("recursion step lost positivity; malformed q");
    return {state.n + 1, z};
}

ConvergenceReport run_to_convergence(const RecursionSpec& spec, int max_n,
                                     double stall_tol, double trap_delta) {
    if (spec.m < 1 || !(spec.c > 0.0))
        throw std::invalid_argument("run_to_convergence: need m >= 1 and c > 0");
    std::vector<double> zs;
    zs.reserve(static_cast<std::size_t>(max_n - spec.m + 1));
    RecursionState st{spec.m, spec.c};
    zs.push_back(st.z);
    bool converged = false;
    while (st.n < max_n) {
        const RecursionState next = step(spec, st);
        const double move = std::fabs(next.z - st.z) * static_cast<double>(st.n);
        st = next;
        zs.push_back(st.z);
        if (move < stall_tol) {
            converged = true;
            break;
        }
    }

    ConvergenceReport rep;
    rep.z = st.z;
    rep.n = st.n;
    rep.converged = converged;
    rep.trap_enter_n = -1;
    rep.trap_held = true;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const bool inside = std::fabs(zs[i] - rep.z) <= trap_delta;
        if (rep.trap_enter_n < 0) {
            if (inside) rep.trap_enter_n = spec.m + static_cast<int>(i);
        } else if (!inside) {
            rep.trap_held = false;
        }
    }
    const std::size_t keep = std::min<std::size_t>(zs.size(), 16);
    rep.tail.assign(zs.end() - static_cast<std::ptrdiff_t>(keep), zs.end());
    return rep;
}

std::vector<SandwichRun> sandwich_bounds(Alpha alpha, const std::vector<int>& j_list,
                                         double A, const std::vector<DpTrace>& trace,
                                         double tol) {
    if (trace.empty() || trace.front().n != 2)
        throw std::invalid_argument("sandwich_bounds: trace must start at n = 2");
    const int N = trace.back().n;
    auto w_at = [&](int n) { return trace[static_cast<std::size_t>(n - 2)].w; };

    // upper recursion, shared by every j: starts where the trace starts
    std::vector<double> upper;
    upper.reserve(trace.size());
    {
        RecursionSpec up{alpha, q_scaling_limit(alpha), 2, w_at(2)};
        RecursionState st{2, w_at(2)};
        upper.push_back(st.z);
        while (st.n < N) {
            st = step(up, st);
            upper.push_back(st.z);
        }
    }

    std::vector<SandwichRun> runs;
    runs.reserve(j_list.size());
    for (int j : j_list) {
        if (!sandwich_monotone(alpha, j, A))
            throw std::invalid_argument("sandwich_bounds: k_j not monotone for j=" +
                                        std::to_string(j) + " at cap " +
                                        std::to_string(A));
        const int m_star = std::max(2, j);
        if (m_star > N)
            throw std::invalid_argument("sandwich_bounds: trace too short for j");
        SandwichRun run;
        run.j = j;
        run.A = A;
        run.upper = upper;
        run.violations = 0;

        RecursionSpec lowspec{alpha, q_sandwich(alpha, j, A), m_star, w_at(m_star)};
        RecursionState st{m_star, w_at(m_star)};
        run.lower.push_back(st.z);
        while (st.n < N) {
            st = step(lowspec, st);
            run.lower.push_back(st.z);
        }

        for (int n = 2; n <= N; ++n) {
            const double w = w_at(n);
            if (w > upper[static_cast<std::size_t>(n - 2)] + tol) ++run.violations;
            if (n >= m_star &&
                run.lower[static_cast<std::size_t>(n - m_star)] > w + tol)
                ++run.violations;
        }
        run.final_lower = run.lower.back();
        run.final_upper = upper.back();
        run.final_w = w_at(N);
        if (run.violations > 0)
            throw std::runtime_error("sandwich ordering violated for j=" +
                                     std::to_string(j));
        runs.push_back(std::move(run));
    }
    return runs;
}

std::vector<double> moment_recursion(Alpha alpha, double r,
                                     const std::vector<double>& A_seq, int n0,
                                     double S0, int N) {
    if (n0 < 1 || N < n0) throw std::invalid_argument("moment_recursion: bad range");
    if (A_seq.size() < static_cast<std::size_t>(N))
        throw std::invalid_argument("moment_recursion: threshold sequence too short");
    const double a = alpha.value();
    const double ra = r / a;
    std::vector<double> S;
    S.reserve(static_cast<std::size_t>(N - n0 + 1));
    double cur = S0;
    S.push_back(cur);
    for (int n = n0; n < N; ++n) {
        const double An = A_seq[static_cast<std::size_t>(n - 1)];
        const double nn = static_cast<double>(n);
        cur = std::pow((nn + 1.0) / nn, ra) *
              (std::pow(An, a + r) / (nn * (1.0 + ra)) +
               (1.0 - std::pow(An, a) / nn) * cur);
        S.push_back(cur);
    }
    return S;
}

double one_choice_moment_start(Alpha alpha, double r) {
    const double a = alpha.value();
    const double a1 = a / (a + 1.0);  // V_1^1 = E X
    const double body =
        a * std::pow(a1, a + r) / (a + r) + (1.0 - std::pow(a1, a)) * a / (a + r);
    return std::pow(2.0, r / a) * body;
}

MomentClass classify_moment_window(const std::vector<double>& S, int lo, int hi) {
    if (lo < 0 || hi <= lo || static_cast<std::size_t>(hi) >= S.size())
        throw std::invalid_argument("classify_moment_window: bad window");
    const double s_lo = S[static_cast<std::size_t>(lo)];
    const double s_hi = S[static_cast<std::size_t>(hi)];
    const auto [mn, mx] = std::minmax_element(S.begin() + lo, S.begin() + hi + 1);
    if (s_hi >= 10.0 * s_lo) return MomentClass::Divergent;
    if (*mx < 2.0 * *mn + 1.0) return MomentClass::Bounded;
    return MomentClass::Indeterminate;
}

} // namespace twostop
