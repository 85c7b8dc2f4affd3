#pragma once

#include "twostop/alpha.hpp"
#include "twostop/dist.hpp"
#include "twostop/dp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace twostop {

/// Thresholds driving the sequential policies on a horizon of n draws,
/// indexed by how many draws remain after the current one. Built from a DP
/// sweep; b[k] is the first-choice threshold when k draws remain (b[1] = 1,
/// so the next-to-last draw is always taken when nothing is held yet).
struct PolicyTable {
    double alpha;
    int n;
    std::vector<double> b;   // b[k] for k = 1..n-1; b[0] unused
    std::vector<double> v1;  // v1[k] = V_k^1 for k = 1..n-1 (one-choice rule)

    static PolicyTable from_trace(Alpha alpha, int n,
                                  const std::vector<DpTrace>& trace);
};

enum class Policy { OneChoice, TwoChoice, Prophet };

struct SimReport {
    Policy policy;
    int n;
    std::int64_t trials;
    double mean;
    double stderr_;
    double scaled_mean;  // n^(1/alpha) * mean
};

/// Number of worker threads for the samplers; results are identical for any
/// setting because every trial owns its own random stream and accumulation
/// order is fixed.
void set_threads(int threads);
int threads();

/// Optional per-trial payoff sink (size = trials) for equivariance checks.
SimReport run_two_choice(const PowerLawDist& dist, const PolicyTable& table,
                         std::int64_t trials, std::uint64_t seed,
                         std::vector<double>* payoffs = nullptr);

SimReport run_one_choice(const PowerLawDist& dist, const PolicyTable& table,
                         std::int64_t trials, std::uint64_t seed,
                         std::vector<double>* payoffs = nullptr);

SimReport run_prophet(const PowerLawDist& dist, int n, std::int64_t trials,
                      std::uint64_t seed, std::vector<double>* payoffs = nullptr);

/// E[(n^(1/alpha) * payoff)^r] with standard error, from a payoff vector.
struct MomentEstimate {
    double r;
    double mean;
    double stderr_;
};
MomentEstimate scaled_moment(const std::vector<double>& payoffs, double alpha,
                             int n, double r);

const char* policy_name(Policy p);

} // namespace twostop
