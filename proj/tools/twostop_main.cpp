#include "twostop/dist.hpp"
#include "twostop/dp.hpp"
#include "twostop/kernels.hpp"
#include "twostop/limits.hpp"
#include "twostop/recursion.hpp"
#include "twostop/report.hpp"
#include "twostop/sim.hpp"
#include "twostop/table1.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace twostop;

struct CommonOpts {
    std::string out;
    std::string format = "csv";
};

void emit(const Table& t, const CommonOpts& c) {
    if (c.out.empty()) {
        if (c.format == "json")
            t.write_json(std::cout);
        else
            t.write_csv(std::cout);
    } else {
        t.write_file(c.out, c.format);
    }
}

std::vector<double> parse_alphas(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
    return out;
}

int fail(const std::string& check) {
    std::cerr << "CHECK FAILED: " << check << "\n";
    return 1;
}

int cmd_table1(const CommonOpts& c, const std::string& alphas_csv, bool diff) {
    std::vector<double> alphas;
    if (alphas_csv.empty())
        for (const auto& row : kTable1) alphas.push_back(row.alpha);
    else
        alphas = parse_alphas(alphas_csv);

    Table t;
    t.columns = {"alpha", "b_alpha",  "lim_nF_V1", "lim_nF_V2", "lim_nF_Vp",
                 "r34",   "r45",      "r35",       "improvement"};
    for (double a : alphas) {
        const LimitConstants lc = solve_b_alpha(Alpha{a});
        t.add_row({lc.alpha, lc.b_alpha, lc.one_choice_limit, lc.two_choice_limit,
                   lc.prophet_limit, lc.ratio_one_two, lc.ratio_two_prophet,
                   lc.ratio_one_prophet, lc.rel_improvement});
    }
    emit(t, c);

    if (diff) {
        double maxdev = 0.0;
        for (const auto& row : t.rows) {
            for (const auto& ref : kTable1) {
                if (std::fabs(ref.alpha - row[0]) > 1e-12) continue;
                const double refs[] = {ref.b_alpha, ref.one_choice, ref.two_choice,
                                       ref.prophet, ref.r34,        ref.r45,
                                       ref.r35,     ref.improvement};
                double dev = 0.0;
                for (int i = 0; i < 8; ++i)
                    dev = std::fmax(dev, std::fabs(row[static_cast<std::size_t>(i + 1)] - refs[i]));
                std::cerr << "alpha=" << row[0] << " max |solver - reference| = "
                          << format_sig6(dev) << "\n";
                maxdev = std::fmax(maxdev, dev);
            }
        }
        std::cerr << "overall max deviation = " << format_sig6(maxdev) << "\n";
        if (maxdev >= 2e-3) return fail("table1 deviation below 2e-3");
    }
    return 0;
}

int cmd_converge(const CommonOpts& c, double alpha, int N, std::size_t grid) {
    const Alpha a{alpha};
    Table t;
    t.columns = {"n", "v1", "v2", "b", "w", "B_pow_alpha", "eps_min", "resid_max"};
    int strictness_bad = 0;
    auto observer = [&](const GnGrid& g, const DpTrace& tr) {
        const FnHnSamples s = fn_hn(g);
        double eps_min = 1e300, resid_max = -1e300;
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            const double eps = f_limit(a, s.y[i]) - s.f[i];
            eps_min = std::fmin(eps_min, eps);
            resid_max = std::fmax(resid_max, eps - s.y[i] / (2.0 * tr.n));
        }
        // strictness is only resolvable above double rounding noise
        if (eps_min < -1e-12 || resid_max > 1e-12) ++strictness_bad;
        t.add_row({static_cast<double>(tr.n), tr.v1, tr.v2, tr.b, tr.w,
                   std::pow(tr.bscaled, alpha), eps_min, resid_max});
    };
    dp_sweep(a, N, grid, observer);
    emit(t, c);
    if (strictness_bad > 0) return fail("envelope bounds 0 < f - f_n < y/2n");
    return 0;
}

int cmd_sandwich(const CommonOpts& c, double alpha, int N, std::size_t grid,
                 const std::string& j_csv, double cap) {
    const Alpha a{alpha};
    const std::vector<int> js = parse_ints(j_csv);
    if (cap <= 0.0) cap = solve_b_alpha(a).b_alpha + 0.2;
    const auto trace = dp_sweep(a, N, grid);
    Table t;
    t.columns = {"j", "cap", "final_lower", "final_w", "final_upper", "violations"};
    try {
        const auto runs = sandwich_bounds(a, js, cap, trace);
        for (const auto& r : runs)
            t.add_row({static_cast<double>(r.j), r.A, r.final_lower, r.final_w,
                       r.final_upper, static_cast<double>(r.violations)});
    } catch (const std::exception& e) {
        return fail(std::string("sandwich ordering: ") + e.what());
    }
    emit(t, c);
    return 0;
}

int cmd_simulate(const CommonOpts& c, double alpha, int n, long long trials,
                 std::uint64_t seed, std::size_t grid) {
    const Alpha a{alpha};
    const PowerLawDist dist{a};
    const auto trace = dp_sweep(a, std::max(2, n - 1), grid);
    const PolicyTable table = PolicyTable::from_trace(a, n, trace);

    const SimReport one = run_one_choice(dist, table, trials, seed);
    const SimReport two = run_two_choice(dist, table, trials, seed + 1);
    const SimReport pro = run_prophet(dist, n, trials, seed + 2);

    Table t;
    t.columns = {"policy_code", "n", "trials", "mean", "stderr", "scaled_mean"};
    for (const SimReport* r : {&one, &two, &pro})
        t.add_row({static_cast<double>(static_cast<int>(r->policy)),
                   static_cast<double>(r->n), static_cast<double>(r->trials),
                   r->mean, r->stderr_, r->scaled_mean});
    emit(t, c);

    // expectation ordering up to Monte Carlo noise
    if (two.mean > one.mean + 3.0 * (two.stderr_ + one.stderr_))
        return fail("mean(two_choice) <= mean(one_choice) + 3 stderr");
    if (pro.mean > two.mean + 3.0 * (pro.stderr_ + two.stderr_))
        return fail("mean(prophet) <= mean(two_choice) + 3 stderr");
    return 0;
}

int cmd_moments(const CommonOpts& c, double alpha, int N, const std::string& r_csv) {
    const Alpha a{alpha};
    const std::vector<double> rs = parse_alphas(r_csv);
    const OneChoiceValues oc = one_choice_values(a, N);
    const int lo_n = std::max(3, N / 100);
    Table t;
    t.columns = {"r", "S_lo", "S_hi", "class_code"};
    bool bad = false;
    std::string bad_check;
    for (double r : rs) {
        const auto S = moment_recursion(a, r, oc.scaled, 2, one_choice_moment_start(a, r), N);
        const MomentClass cls = classify_moment_window(S, lo_n - 2, N - 2);
        t.add_row({r, S[static_cast<std::size_t>(lo_n - 2)], S.back(),
                   static_cast<double>(static_cast<int>(cls))});
        const double crit = 1.0 + alpha;
        if (r < crit && cls == MomentClass::Divergent) {
            bad = true;
            bad_check = "moment bounded for r < 1 + alpha";
        }
        if (r > crit && cls == MomentClass::Bounded) {
            bad = true;
            bad_check = "moment divergent for r > 1 + alpha";
        }
    }
    emit(t, c);
    if (bad) return fail(bad_check);
    return 0;
}

int cmd_asymptote(const CommonOpts& c, const std::string& direction,
                  const std::string& alphas_csv) {
    const AsymptoteDirection dir = direction == "to_zero"
                                       ? AsymptoteDirection::ToZero
                                       : AsymptoteDirection::ToInfinity;
    std::vector<double> alphas;
    if (!alphas_csv.empty())
        alphas = parse_alphas(alphas_csv);
    else if (dir == AsymptoteDirection::ToZero)
        alphas = {0.5, 0.2, 0.1};
    else
        alphas = {2.0, 5.0, 10.0};

    Table t;
    t.columns = {"alpha",           "two_choice",      "prophet",
                 "improvement",     "r34",             "r45",
                 "r35",             "gap_two_choice",  "gap_prophet",
                 "gap_improvement", "gap_r34",         "gap_r45",
                 "gap_r35"};
    for (const AsymptoteRow& r : asymptote_check(dir, alphas))
        t.add_row({r.alpha, r.two_choice, r.prophet, r.improvement, r.ratio_one_two,
                   r.ratio_two_prophet, r.ratio_one_prophet, r.gap_two_choice,
                   r.gap_prophet, r.gap_improvement, r.gap_ratio_one_two,
                   r.gap_ratio_two_prophet, r.gap_ratio_one_prophet});
    emit(t, c);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal stopping engine: limits, DP sweeps, recursions, simulation"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string backend = "auto";
    app.add_option("--backend", backend, "kernel backend: auto, scalar, avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    double alpha = 1.0;
    std::string alphas_csv;
    int n = 1000;
    long long trials = 100000;
    std::uint64_t seed = 20240817ULL;
    std::size_t grid = 4096;
    bool diff = false;
    std::string j_csv = "32,64";
    double cap = 0.0;
    std::string r_csv = "1.5,3";
    std::string direction = "to_infinity";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out, "output path (default stdout)");
        sub->add_option("--format", common.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* t1 = app.add_subcommand("table1", "limiting constants for the reference shapes");
    add_common(t1);
    t1->add_option("--alphas", alphas_csv, "comma list of shape parameters");
    t1->add_flag("--diff", diff, "print deviation from the reference fixture");

    auto* cv = app.add_subcommand("converge", "two-choice DP sweep with envelope residuals");
    add_common(cv);
    cv->add_option("--alpha", alpha, "shape parameter")->check(CLI::PositiveNumber);
    cv->add_option("--n", n, "final stage")->check(CLI::PositiveNumber);
    cv->add_option("--grid-size", grid, "grid resolution")->check(CLI::PositiveNumber);

    auto* sw = app.add_subcommand("sandwich", "bounding recursions around the DP values");
    add_common(sw);
    sw->add_option("--alpha", alpha, "shape parameter")->check(CLI::PositiveNumber);
    sw->add_option("--n", n, "final stage")->check(CLI::PositiveNumber);
    sw->add_option("--grid-size", grid, "grid resolution")->check(CLI::PositiveNumber);
    sw->add_option("--j", j_csv, "comma list of lower-bound indices");
    sw->add_option("--cap", cap, "flattening cap (default: root + 0.2)");

    auto* si = app.add_subcommand("simulate", "Monte Carlo policy runs");
    add_common(si);
    si->add_option("--alpha", alpha, "shape parameter")->check(CLI::PositiveNumber);
    si->add_option("--n", n, "horizon")->check(CLI::PositiveNumber);
    si->add_option("--trials", trials, "trial count")->check(CLI::PositiveNumber);
    si->add_option("--seed", seed, "random seed");
    si->add_option("--grid-size", grid, "grid resolution")->check(CLI::PositiveNumber);

    auto* mo = app.add_subcommand("moments", "scaled moment recursion diagnosis");
    add_common(mo);
    mo->add_option("--alpha", alpha, "shape parameter")->check(CLI::PositiveNumber);
    mo->add_option("--n", n, "final index")->check(CLI::PositiveNumber);
    mo->add_option("--r", r_csv, "comma list of moment orders");

    auto* as = app.add_subcommand("asymptote", "distance to the small/large shape limits");
    add_common(as);
    as->add_option("--direction", direction, "to_zero or to_infinity")
        ->check(CLI::IsMember({"to_zero", "to_infinity"}));
    as->add_option("--alphas", alphas_csv, "comma list of shape parameters");

    CLI11_PARSE(app, argc, argv);

    if (backend == "scalar") {
        twostop::kernels::set_backend(twostop::kernels::Backend::Scalar);
    } else if (backend == "avx2") {
        if (!twostop::kernels::set_backend(twostop::kernels::Backend::Avx2)) {
            std::cerr << "avx2 backend not available on this host\n";
            return 2;
        }
    }

    try {
        if (t1->parsed()) return cmd_table1(common, alphas_csv, diff);
        if (cv->parsed()) return cmd_converge(common, alpha, n, grid);
        if (sw->parsed()) return cmd_sandwich(common, alpha, n, grid, j_csv, cap);
        if (si->parsed()) return cmd_simulate(common, alpha, n, trials, seed, grid);
        if (mo->parsed())
            return cmd_moments(common, alpha,
                               mo->count("--n") ? n : 100000, r_csv);
        if (as->parsed()) return cmd_asymptote(common, direction, alphas_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
