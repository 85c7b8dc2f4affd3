#include "twostop/sim.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace twostop {

namespace {

int g_threads = 1;

struct ChunkSums {
    double sum = 0.0;
    double sumsq = 0.0;
};

constexpr std::int64_t kChunk = 4096;

// Runs `payoff(rng)` once per trial; trial t uses stream (seed, t), and the
// reduction walks fixed-size chunks in order, so the result is identical for
// any thread count.
template <class PayoffFn>
SimReport run_trials(Policy policy, double alpha, int n, std::int64_t trials,
                     std::uint64_t seed, std::vector<double>* payoffs,
                     PayoffFn&& payoff) {
    if (trials < 1) throw std::invalid_argument("simulation needs trials >= 1");
    const std::int64_t nchunks = (trials + kChunk - 1) / kChunk;
    std::vector<ChunkSums> chunks(static_cast<std::size_t>(nchunks));
    if (payoffs) payoffs->assign(static_cast<std::size_t>(trials), 0.0);

    auto work = [&](std::int64_t chunk) {
        const std::int64_t lo = chunk * kChunk;
        const std::int64_t hi = std::min(trials, lo + kChunk);
        ChunkSums acc;
        for (std::int64_t t = lo; t < hi; ++t) {
            UniformStream rng(seed, static_cast<std::uint64_t>(t));
            const double p = payoff(rng);
            acc.sum += p;
            acc.sumsq += p * p;
            if (payoffs) (*payoffs)[static_cast<std::size_t>(t)] = p;
        }
        chunks[static_cast<std::size_t>(chunk)] = acc;
    };

    const int nt = std::max(1, g_threads);
    if (nt == 1 || nchunks == 1) {
        for (std::int64_t c = 0; c < nchunks; ++c) work(c);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nt));
        for (int i = 0; i < nt; ++i)
            pool.emplace_back([&] {
                for (std::int64_t c = next.fetch_add(1); c < nchunks;
                     c = next.fetch_add(1))
                    work(c);
            });
        for (auto& th : pool) th.join();
    }

    double sum = 0.0, sumsq = 0.0;
    for (const ChunkSums& c : chunks) {
        sum += c.sum;
        sumsq += c.sumsq;
    }
    const double tn = static_cast<double>(trials);
    const double mean = sum / tn;
    const double var = std::fmax(0.0, sumsq / tn - mean * mean);
    SimReport rep;
    rep.policy = policy;
    rep.n = n;
    rep.trials = trials;
    rep.mean = mean;
    rep.stderr_ = std::sqrt(var / tn);
    rep.scaled_mean = std::pow(static_cast<double>(n), 1.0 / alpha) * mean;
    return rep;
}

double g_map(double v, double p) { return v - std::pow(v, p) / p; }

} // namespace

void set_threads(int threads) {
    if (threads < 1) throw std::invalid_argument("set_threads: need >= 1");
    g_threads = threads;
}

int threads() { return g_threads; }

PolicyTable PolicyTable::from_trace(Alpha alpha, int n,
                                    const std::vector<DpTrace>& trace) {
    if (n < 1) throw std::invalid_argument("PolicyTable: horizon must be >= 1");
    PolicyTable tab;
    tab.alpha = alpha.value();
    tab.n = n;
    tab.b.assign(static_cast<std::size_t>(n), 0.0);
    tab.v1.assign(static_cast<std::size_t>(n), 0.0);
    if (n >= 2) {
        tab.b[1] = 1.0;  // nothing held and one draw left: always take
        tab.v1[1] = g1(alpha, 1.0);
    }
    for (int k = 2; k <= n - 1; ++k) {
        const std::size_t ti = static_cast<std::size_t>(k - 2);
        if (ti >= trace.size() || trace[ti].n != k)
            throw std::invalid_argument("PolicyTable: trace does not cover horizon");
        tab.b[static_cast<std::size_t>(k)] = trace[ti].b;
        tab.v1[static_cast<std::size_t>(k)] = trace[ti].v1;
    }
    return tab;
}

SimReport run_two_choice(const PowerLawDist& dist, const PolicyTable& table,
                         std::int64_t trials, std::uint64_t seed,
                         std::vector<double>* payoffs) {
    const int n = table.n;
    const double a = dist.alpha().value();
    const double p = a + 1.0;
    const double scale = dist.scale();
    if (table.alpha != a)
        throw std::invalid_argument("run_two_choice: table/dist shape mismatch");

    auto payoff = [&](UniformStream& rng) {
        // draws observed X_n, ..., X_1; m-1 remain after the current one
        double first = -1.0;
        std::vector<double> giter;  // giter[i] = g_i(first), g_0 = identity
        double best = 0.0;
        for (int m = n; m >= 1; --m) {
            const double x = dist.quantile_unit(rng.next());
            if (first < 0.0) {
                if (m == 1) return scale * x;  // forced single choice
                if (x < table.b[static_cast<std::size_t>(m - 1)]) {
                    first = x;
                    best = x;
                    // iterates g_1(first)..g_{m-2}(first), consumed in
                    // decreasing order as the remaining draws arrive
                    giter.assign(static_cast<std::size_t>(std::max(0, m - 1)), 0.0);
                    double v = first;
                    giter[0] = v;
                    for (int i = 1; i <= m - 2; ++i) {
                        v = g_map(v, p);
                        giter[static_cast<std::size_t>(i)] = v;
                    }
                }
            } else if (x < giter[static_cast<std::size_t>(m - 1)]) {
                return scale * std::fmin(first, x);  // second choice taken
            }
        }
        return scale * best;  // first choice only
    };
    return run_trials(Policy::TwoChoice, a, n, trials, seed, payoffs, payoff);
}

SimReport run_one_choice(const PowerLawDist& dist, const PolicyTable& table,
                         std::int64_t trials, std::uint64_t seed,
                         std::vector<double>* payoffs) {
    const int n = table.n;
    const double a = dist.alpha().value();
    const double scale = dist.scale();
    if (table.alpha != a)
        throw std::invalid_argument("run_one_choice: table/dist shape mismatch");

    auto payoff = [&](UniformStream& rng) {
        for (int m = n; m >= 2; --m) {
            const double x = dist.quantile_unit(rng.next());
            if (x < table.v1[static_cast<std::size_t>(m - 1)]) return scale * x;
        }
        return scale * dist.quantile_unit(rng.next());  // forced last take
    };
    return run_trials(Policy::OneChoice, a, n, trials, seed, payoffs, payoff);
}

SimReport run_prophet(const PowerLawDist& dist, int n, std::int64_t trials,
                      std::uint64_t seed, std::vector<double>* payoffs) {
    if (n < 1) throw std::invalid_argument("run_prophet: horizon must be >= 1");
    const double a = dist.alpha().value();
    const double scale = dist.scale();
    auto payoff = [&](UniformStream& rng) {
        double m = dist.quantile_unit(rng.next());
        for (int k = 1; k < n; ++k) m = std::fmin(m, dist.quantile_unit(rng.next()));
        return scale * m;
    };
    return run_trials(Policy::Prophet, a, n, trials, seed, payoffs, payoff);
}

MomentEstimate scaled_moment(const std::vector<double>& payoffs, double alpha,
                             int n, double r) {
    if (payoffs.empty()) throw std::invalid_argument("scaled_moment: no payoffs");
    const double s = std::pow(static_cast<double>(n), 1.0 / alpha);
    double sum = 0.0, sumsq = 0.0;
    for (double p : payoffs) {
        const double v = std::pow(s * p, r);
        sum += v;
        sumsq += v * v;
    }
    const double tn = static_cast<double>(payoffs.size());
    const double mean = sum / tn;
    const double var = std::fmax(0.0, sumsq / tn - mean * mean);
    return {r, mean, std::sqrt(var / tn)};
}

const char* policy_name(Policy p) {
    switch (p) {
    case Policy::OneChoice: return "one_choice";
    case Policy::TwoChoice: return "two_choice";
    case Policy::Prophet: return "prophet";
    }
    return "unknown";
}

} // namespace twostop
