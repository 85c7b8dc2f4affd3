#pragma once

#include "twostop/alpha.hpp"
#include "twostop/dp.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace twostop {

/// Monotone non-decreasing q with q(0)=0, the driver of the generic scaled
/// recursion Z_{n+1} = ((n+1)/n)^(1/alpha) (1/n) integral_0^n (q ^ Z_n) dy.
/// Provides the inverse (sup convention on a plateau) and a prefix integral
/// with incremental caching so that long runs stay cheap.
class QFunction {
public:
    virtual ~QFunction() = default;
    virtual double eval(double y) const = 0;

    /// sup{y <= ymax : q(y) < t} for monotone q; returns ymax when q stays
    /// below t throughout, and the plateau edge when t is at or above a
    /// plateau value.
    virtual double inverse(double t, double ymax) const;

    /// integral_0^s q(y) dy; incremental from the last evaluation point.
    virtual double integral_to(double s) const;

    double alpha() const { return alpha_; }

protected:
    explicit QFunction(double alpha) : alpha_(alpha) {}
    double alpha_;

private:
    mutable double cache_s_ = 0.0;
    mutable double cache_i_ = 0.0;
};

/// q(y) = y^(1/alpha): the one-choice instance, all pieces in closed form.
std::shared_ptr<QFunction> q_power(Alpha alpha);

/// q(y) = h(y), the limiting scaled value function: the upper sandwich.
std::shared_ptr<QFunction> q_scaling_limit(Alpha alpha);

/// q(y) = k_j(y) = y^(1/alpha) (f(y) - y/2j) on (0, A), constant beyond A:
/// the lower sandwich.
std::shared_ptr<QFunction> q_sandwich(Alpha alpha, int j, double A);

/// k_j drives the lower recursion as soon as it is strictly increasing on
/// (0, A); the bound ordering needs nothing more.
bool sandwich_monotone(Alpha alpha, int j, double A, int samples = 512);

/// Stronger notion used when identifying the limit d_j: monotone and the root
/// functional K_j(A) < 0, so the root lies inside (1/alpha, A).
bool sandwich_admissible(Alpha alpha, int j, double A, int samples = 512);
int smallest_admissible_j(Alpha alpha, double A, int j_hi = 4096);

struct RecursionSpec {
    Alpha alpha;
    std::shared_ptr<QFunction> q;
    int m = 2;       // starting index
    double c = 1.0;  // starting value, > 0
};

struct RecursionState {
    int n;
    double z;
};

RecursionState step(const RecursionSpec& spec, const RecursionState& state);

struct ConvergenceReport {
    double z;                  // final value
    int n;                     // final index
    bool converged;            // stall criterion met before max_n
    bool trap_held;            // once within delta of the final value, stayed
    int trap_enter_n;          // first n with |Z_n - z| <= delta, or -1
    std::vector<double> tail;  // last few Z values for diagnostics
};

ConvergenceReport run_to_convergence(const RecursionSpec& spec, int max_n,
                                     double stall_tol = 1e-9,
                                     double trap_delta = 0.01);

/// Lower (k_j) and upper (h) recursions run alongside the exact scaled values
/// W_n from the sweep; the ordering lower <= W <= upper is asserted at every
/// overlapping index.
struct SandwichRun {
    int j;
    double A;
    std::vector<double> lower;  // lower[i] pairs with trace index of n = j + i
    std::vector<double> upper;  // upper[i] pairs with n = 2 + i
    double final_lower;
    double final_upper;
    double final_w;
    int violations;  // ordering breaches beyond tolerance (0 on success)
};

std::vector<SandwichRun> sandwich_bounds(Alpha alpha, const std::vector<int>& j_list,
                                         double A, const std::vector<DpTrace>& trace,
                                         double tol = 1e-9);

/// Scaled r-th moment recursion driven by the scaled thresholds A_n:
/// (n/(n+1))^(r/alpha) S_{n+1} = A_n^(alpha+r)/(n (1+r/alpha)) + (1 - A_n^alpha/n) S_n.
/// A_fn(n) supplies A_n; starts at n0 with the exact small-n value S0.
std::vector<double> moment_recursion(Alpha alpha, double r,
                                     const std::vector<double>& A_seq, int n0,
                                     double S0, int N);

/// Exact S_2(r) = 2^(r/alpha) E[(stopped value)^r] for the one-choice rule on
/// two pure draws.
double one_choice_moment_start(Alpha alpha, double r);

enum class MomentClass { Bounded, Divergent, Indeterminate };

/// Window diagnosis per the asymptotic dichotomy: divergent when S grows by
/// >= 10x between n = lo and n = hi, bounded when the window max stays below
/// 2 * window min + 1.
MomentClass classify_moment_window(const std::vector<double>& S, int lo, int hi);

} // namespace twostop
