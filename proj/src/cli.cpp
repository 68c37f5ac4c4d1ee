// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mmimo/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mmimo/dof.hpp"
#include "mmimo/errors.hpp"
#include "mmimo/montecarlo.hpp"
#include "mmimo/output.hpp"
#include "mmimo/power.hpp"
#include "mmimo/split.hpp"

namespace mmimo::cli {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

struct CommonFlags {
    std::string out_path;
    bool json = false;
    bool csv = false;
    unsigned threads = 0;
    bool db = false;

    OutputFormat format() const { return json ? OutputFormat::JsonLines : OutputFormat::Csv; }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--out", f.out_path, "Write records to FILE instead of stdout");
    auto* json = cmd->add_flag("--json", f.json, "Emit JSON lines");
    auto* csv = cmd->add_flag("--csv", f.csv, "Emit CSV with a header row (default)");
    json->excludes(csv);
    cmd->add_option("--threads", f.threads, "Worker threads (0: MMIMO_THREADS or hardware)");
    cmd->add_flag("--db", f.db, "Read and print powers in dB instead of linear units");
}

int emit(const Table& t, const CommonFlags& f, std::ostream& out, std::ostream& err) {
    if (f.out_path.empty()) {
        write_table(out, t, f.format());
        return kExitOk;
    }
    std::ofstream file(f.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << f.out_path << " for writing\n";
        return kExitUsage;
    }
    write_table(file, t, f.format());
    return kExitOk;
}

Cell power_cell(double P, bool db) { return db ? linear_to_db(P) : P; }

Cell optional_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

std::optional<Receiver> parse_receiver(const std::string& s) {
    if (s == "mrc") return Receiver::MRC;
    if (s == "zf") return Receiver::ZF;
    if (s == "mmse" || s == "mmse-empirical") return Receiver::MMSE;
    return std::nullopt;
}

// ---------------------------------------------------------------- split

struct SplitArgs {
    double P = 1.0;
    int T = 0;
    int K = 0;
    double resolution = 1e-4;
};

int cmd_split(const SplitArgs& a, const CommonFlags& f, std::ostream& out, std::ostream& err) {
    const double P = f.db ? db_to_linear(a.P) : a.P;
    if (!(P > 0.0)) throw DomainError("P > 0 violated");
    validate_params({a.K, a.K, a.T, P}, true);

    const SplitSolution closed = optimal_split_closed_form(P, a.T, a.K);
    const SplitSolution grid = optimal_split_grid(P, a.T, a.K, a.resolution);
    const double rel = std::abs(closed.rho_star - grid.rho_star) / grid.rho_star;

    Table t{{"method", "P", "T", "K", "alpha_train", "E", "P_d", "rho_star", "rel_diff"}, {}};
    for (const auto* s : {&closed, &grid}) {
        t.add_row({std::string(s->method == SplitMethod::ClosedForm ? "closed_form" : "grid"),
                   power_cell(P, f.db), std::int64_t{a.T}, std::int64_t{a.K}, s->alpha_train, s->E,
                   s->P_d, s->rho_star, rel});
    }
    return emit(t, f, out, err);
}

// ---------------------------------------------------------------- rates

struct RatesArgs {
    int M = 0;
    int K = 0;
    int T = 0;
    double P = 1.0;
    std::string axis = "P";
    std::vector<double> values;
    std::vector<double> range;
    std::string receiver = "mrc";
    bool empirical = false;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
};

std::vector<double> sweep_values(const RatesArgs& a) {
    if (!a.values.empty() && !a.range.empty()) throw DomainError("give either --values or --range");
    std::vector<double> v = a.values;
    if (!a.range.empty()) {
        if (a.range.size() != 3) throw DomainError("--range takes START STOP POINTS");
        const double start = a.range[0], stop = a.range[1];
        const auto n = static_cast<int>(a.range[2]);
        if (n < 1 || a.range[2] != n) throw DomainError("--range POINTS must be a positive integer");
        if (n == 1) {
            v = {start};
        } else if (start > 0.0 && stop > 0.0) {
            for (int i = 0; i < n; ++i) v.push_back(start * std::pow(stop / start, double(i) / (n - 1)));
        } else {
            throw DomainError("--range needs positive START and STOP for a geometric grid");
        }
    }
    if (v.empty()) throw DomainError("sweep values must be non-empty");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) throw DomainError("sweep values must be strictly increasing");
    return v;
}

int cmd_rates(const RatesArgs& a, const CommonFlags& f, std::ostream& out, std::ostream& err) {
    const auto receiver = parse_receiver(a.receiver);
    if (!receiver) throw DomainError("unknown receiver '" + a.receiver + "'");
    const bool empirical = a.empirical || a.receiver == "mmse-empirical";
    if (*receiver == Receiver::MMSE && !empirical)
        throw DomainError("the MMSE receiver has no closed-form bound; use mmse-empirical");

    const std::string& axis = a.axis;
    if (axis != "P" && axis != "M" && axis != "K" && axis != "T" && axis != "alpha")
        throw DomainError("axis must be one of P, M, K, T, alpha");
    const std::vector<double> values = sweep_values(a);
    const bool integer_axis = axis == "M" || axis == "K" || axis == "T";
    if (integer_axis)
        for (double v : values)
            if (v != std::round(v)) throw DomainError("axis " + axis + " takes integer values");
    if (axis == "alpha")
        for (double v : values)
            if (!(v >= 0.0 && v <= 1.0)) throw DomainError("alpha values must lie in [0, 1]");

    const double fixed_P = f.db ? db_to_linear(a.P) : a.P;
    if (axis == "P" || axis == "alpha") validate_params({a.M, a.K, a.T, fixed_P}, true);
    if (empirical && a.trials < 100) throw DomainError("--trials must be at least 100");

    Table t{{"M", "K", "T", "P", "alpha_train", "rho", "rate_mrc", "rate_zf", "receiver",
             "rate_empirical", "stderr_empirical", "note"},
            {}};
    for (double v : values) {
        SystemParams p{a.M, a.K, a.T, fixed_P};
        std::optional<double> alpha;
        if (axis == "P") p.P = f.db ? db_to_linear(v) : v;
        if (axis == "M") p.M = static_cast<int>(v);
        if (axis == "K") p.K = static_cast<int>(v);
        if (axis == "T") p.T = static_cast<int>(v);
        if (axis == "alpha") alpha = v;

        std::vector<Cell> row{std::int64_t{p.M}, std::int64_t{p.K}, std::int64_t{p.T},
                              power_cell(p.P, f.db)};
        const std::string tag = empirical ? std::string(a.receiver) : std::string();
        try {
            validate_params(p, true);
            if (!(p.P > 0.0)) throw DomainError("P > 0 violated");
        } catch (const DomainError& e) {
            row.insert(row.end(), {alpha ? Cell{*alpha} : Cell{}, Cell{}, Cell{}, Cell{}, Cell{tag},
                                   Cell{}, Cell{}, Cell{std::string(e.what())}});
            t.add_row(std::move(row));
            continue;
        }

        EnergySplit split;
        if (alpha) {
            split = make_split(p.P, p.T, p.K, *alpha * p.P * p.T);
            split.alpha_train = *alpha;
        } else {
            split = optimal_split_grid(p.P, p.T, p.K).split();
        }
        const double rho = effective_snr(split.P_d, split.E, p.K).rho;
        std::optional<double> zf;
        if (p.M >= p.K) zf = rate_zf(rho, p.M, p.K, p.T).per_user_rate;

        std::optional<double> emp_mean, emp_err;
        if (empirical) {
            const McOptions mc{a.trials, a.seed, f.threads};
            const EmpiricalRate r = empirical_rate(*receiver, p, split, mc);
            emp_mean = r.mean_per_user_rate;
            emp_err = r.std_error;
        }
        row.insert(row.end(), {split.alpha_train, rho, rate_mrc(rho, p.M, p.K, p.T).per_user_rate,
                               optional_cell(zf), Cell{tag}, optional_cell(emp_mean),
                               optional_cell(emp_err), Cell{}});
        t.add_row(std::move(row));
    }
    return emit(t, f, out, err);
}

// ---------------------------------------------------------------- dof

struct DofArgs {
    int M = 0;
    int K = 0;
    int T = 0;
    std::string scheme = "zf";
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    double grid_lo = 0x1.0p10;
    double grid_hi = 0x1.0p30;
    double grid_ratio = 4.0;
};

int cmd_dof(const DofArgs& a, const CommonFlags& f, std::ostream& out, std::ostream& err) {
    validate_params({a.M, a.K, a.T, 0.0}, false);
    SlopeScheme scheme;
    if (a.scheme == "zf")
        scheme = SlopeScheme::ZfEqualPower;
    else if (a.scheme == "mrc")
        scheme = SlopeScheme::MrcEqualPower;
    else if (a.scheme == "mac")
        scheme = SlopeScheme::CoherentMac;
    else if (a.scheme == "mmse")
        scheme = SlopeScheme::MmseEqualPower;
    else
        throw DomainError("scheme must be one of zf, mrc, mac, mmse");

    const double lo = f.db ? db_to_linear(a.grid_lo) : a.grid_lo;
    const double hi = f.db ? db_to_linear(a.grid_hi) : a.grid_hi;
    const std::vector<double> grid = geometric_grid(lo, hi, a.grid_ratio);
    const DofResult theory = dof_total(a.M, a.K, a.T);
    const McOptions mc{a.trials, a.seed, f.threads};
    const SlopeEstimate est = dof_slope_estimate(scheme, a.M, a.K, a.T, grid, mc);

    if (est.slope <= 0.1 && theory.dof_total > 0.1)
        err << "warning: total rate saturates (slope " << format_double(est.slope)
            << ") while the DoF is " << format_double(theory.dof_total) << "\n";

    Table t{{"M", "K", "T", "scheme", "k_star", "dof_theorem", "slope", "abs_error"}, {}};
    t.add_row({std::int64_t{a.M}, std::int64_t{a.K}, std::int64_t{a.T},
               std::string(to_string(scheme)), std::int64_t{theory.k_star}, theory.dof_total,
               est.slope, std::abs(est.slope - theory.dof_total)});
    return emit(t, f, out, err);
}

// ---------------------------------------------------------------- power

struct PowerArgs {
    double R = 0.0;
    int K = 0;
    int T = 0;
    std::string receiver = "mrc";
    std::vector<int> m_values;
};

int cmd_power(const PowerArgs& a, const CommonFlags& f, std::ostream& out, std::ostream& err) {
    const auto receiver = parse_receiver(a.receiver);
    if (!receiver || *receiver == Receiver::MMSE) throw DomainError("receiver must be mrc or zf");
    if (!(a.R > 0.0)) throw DomainError("R > 0 violated");
    if (a.K < 1 || a.K >= a.T) throw DomainError("K < T violated");
    const auto rows = power_sweep(a.R, a.K, a.T, *receiver, a.m_values, f.threads);

    Table t{{"M", "R", "K", "T", "receiver", "P_exact", "P_asymptotic", "ratio", "achieved_rate",
             "error"},
            {}};
    bool failed = false;
    for (const auto& r : rows) {
        Cell p_exact, achieved, ratio;
        if (r.exact) {
            p_exact = power_cell(r.exact->P_required, f.db);
            achieved = r.exact->achieved_rate;
            ratio = r.ratio;
        } else {
            failed = true;
        }
        t.add_row({std::int64_t{r.M}, a.R, std::int64_t{a.K}, std::int64_t{a.T}, a.receiver,
                   p_exact, power_cell(r.asymptotic.P_required, f.db), ratio, achieved,
                   r.error.empty() ? Cell{} : Cell{r.error}});
    }
    const int rc = emit(t, f, out, err);
    if (rc != kExitOk) return rc;
    if (failed) {
        err << "error: at least one row could not be solved\n";
        return kExitNumerical;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    int M = 0;
    int K = 0;
    int T = 0;
    double P = 1.0;
    std::optional<double> alpha;
    std::string receiver = "all";
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    bool per_trial = false;
};

int cmd_simulate(const SimulateArgs& a, const CommonFlags& f, std::ostream& out, std::ostream& err) {
    const double P = f.db ? db_to_linear(a.P) : a.P;
    const SystemParams p = validate_params({a.M, a.K, a.T, P}, true);
    if (!(P > 0.0)) throw DomainError("P > 0 violated");
    if (a.trials < 100) throw DomainError("--trials must be at least 100");

    std::vector<std::pair<std::string, Receiver>> receivers;
    if (a.receiver == "all") {
        receivers = {{"mrc", Receiver::MRC}, {"mmse", Receiver::MMSE}};
        if (p.M >= p.K) receivers.insert(receivers.begin() + 1, {"zf", Receiver::ZF});
    } else if (auto r = parse_receiver(a.receiver)) {
        receivers = {{a.receiver, *r}};
    } else {
        throw DomainError("unknown receiver '" + a.receiver + "'");
    }

    EnergySplit split;
    if (a.alpha) {
        if (!(*a.alpha >= 0.0 && *a.alpha <= 1.0)) throw DomainError("alpha in [0, 1] violated");
        split = make_split(P, p.T, p.K, *a.alpha * P * p.T);
        split.alpha_train = *a.alpha;
    } else {
        split = optimal_split_grid(P, p.T, p.K).split();
    }
    const double rho = effective_snr(split.P_d, split.E, p.K).rho;
    const McOptions mc{a.trials, a.seed, f.threads};
    const double prelog = 1.0 - static_cast<double>(p.K) / p.T;

    Table t;
    if (a.per_trial) {
        t.columns = {"receiver", "trial", "rate"};
        for (const auto& [name, r] : receivers) {
            const TrialRates tr = simulate_trial_rates(r, p, split, mc);
            for (std::size_t i = 0; i < tr.per_trial.size(); ++i)
                t.add_row({name, static_cast<std::int64_t>(i), prelog * tr.per_trial[i]});
        }
        return emit(t, f, out, err);
    }

    t.columns = {"receiver", "M", "K", "T", "P", "alpha_train", "rho", "rate_bound",
                 "rate_empirical", "stderr", "trials", "resamples"};
    for (const auto& [name, r] : receivers) {
        const EmpiricalRate er = empirical_rate(r, p, split, mc);
        Cell bound;
        if (r == Receiver::MRC) bound = rate_mrc(rho, p.M, p.K, p.T).per_user_rate;
        if (r == Receiver::ZF) bound = rate_zf(rho, p.M, p.K, p.T).per_user_rate;
        t.add_row({name, std::int64_t{p.M}, std::int64_t{p.K}, std::int64_t{p.T},
                   power_cell(P, f.db), split.alpha_train, rho, bound, er.mean_per_user_rate,
                   er.std_error, static_cast<std::int64_t>(er.trials),
                   static_cast<std::int64_t>(er.resamples)});
    }
    return emit(t, f, out, err);
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const CommonFlags& f, std::ostream& out) {
    struct Check {
        std::string name;
        std::function<bool()> ok;
    };
    const McOptions mc{1000, 7, f.threads};
    const std::vector<Check> checks = {
        {"variances_sum_to_one",
         [] {
             for (double E : {0.0, 0.5, 1.0, 3.0, 10.0, 1e6}) {
                 const auto v = estimation_variances(E);
                 if (v.sigma2_hat + v.sigma2_tilde != 1.0) return false;
             }
             return true;
         }},
        {"effective_snr_two_routes",
         [] {
             const double P_d = 2.0, E = 4.0;
             const double direct = effective_snr(P_d, E, 2).rho;
             const double routed =
                 P_d * estimation_variances(E).sigma2_hat / noise_variance_equiv(P_d, E, 2);
             return std::abs(direct - routed) <= 1e-14 * direct;
         }},
        {"split_closed_form_matches_grid",
         [] {
             for (double P : {1e-2, 1.0, 1e2})
                 for (int T : {3, 4, 10}) {
                     const double c = optimal_split_closed_form(P, T, 2).rho_star;
                     const double g = optimal_split_grid(P, T, 2).rho_star;
                     if (std::abs(c - g) > 1e-6 * g) return false;
                 }
             return true;
         }},
        {"dof_theorem_values",
         [] {
             return dof_total(64, 8, 20).dof_total == 4.8 &&
                    std::abs(dof_total(4, 10, 5).dof_total - 1.2) < 1e-15 &&
                    dof_total(2, 2, 4).dof_total == 1.0;
         }},
        {"zf_slope_matches_dof",
         [] {
             const auto grid = default_dof_grid();
             const auto est = dof_slope_estimate(SlopeScheme::ZfEqualPower, 8, 4, 16, grid);
             return std::abs(est.slope - 3.0) <= 0.05;
         }},
        {"asymptotic_power_halves",
         [] {
             const double a = required_power_asymptotic(1.0, 100, 2, 10).P_required;
             const double b = required_power_asymptotic(1.0, 400, 2, 10).P_required;
             return std::abs(b / a - 0.5) < 1e-15;
         }},
        {"empirical_zf_dominates_bound",
         [&] {
             const SystemParams p{10, 2, 10, 1.0};
             const auto split = optimal_split_grid(p.P, p.T, p.K).split();
             const double rho = effective_snr(split.P_d, split.E, p.K).rho;
             const auto r = empirical_rate(Receiver::ZF, p, split, mc);
             return r.mean_per_user_rate >= rate_zf(rho, 10, 2, 10).per_user_rate - 3 * r.std_error;
         }},
        {"empirical_rate_deterministic",
         [&] {
             const SystemParams p{8, 4, 16, 1.0};
             const auto split = optimal_split_grid(p.P, p.T, p.K).split();
             const auto a1 = empirical_rate(Receiver::MMSE, p, split, {200, 3, 1});
             const auto a2 = empirical_rate(Receiver::MMSE, p, split, {200, 3, 4});
             return a1.mean_per_user_rate == a2.mean_per_user_rate && a1.std_error == a2.std_error;
         }},
    };

    bool all = true;
    for (const auto& c : checks) {
        bool ok = false;
        try {
            ok = c.ok();
        } catch (const std::exception&) {
            ok = false;
        }
        all = all && ok;
        out << (ok ? "PASS " : "FAIL ") << c.name << '\n';
    }
    return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Massive-MIMO uplink analysis without receiver CSI", "mmimo"};
    app.require_subcommand(1);

    CommonFlags common;

    SplitArgs split;
    auto* c_split = app.add_subcommand("split", "Optimal training/data energy split");
    c_split->add_option("--p", split.P, "Average transmit power per user")->required();
    c_split->add_option("--t", split.T, "Coherence interval")->required();
    c_split->add_option("--k", split.K, "Number of users")->required();
    c_split->add_option("--resolution", split.resolution, "Grid oracle step in alpha (<= 1e-4)");
    add_common(c_split, common);

    RatesArgs rates;
    auto* c_rates = app.add_subcommand("rates", "MRC/ZF rate bounds over a sweep");
    c_rates->add_option("--m", rates.M, "Receive antennas")->required();
    c_rates->add_option("--k", rates.K, "Number of users")->required();
    c_rates->add_option("--t", rates.T, "Coherence interval")->required();
    c_rates->add_option("--p", rates.P, "Power when P is not the sweep axis");
    c_rates->add_option("--axis", rates.axis, "Sweep axis: P, M, K, T or alpha");
    c_rates->add_option("--values", rates.values, "Explicit sweep values");
    c_rates->add_option("--range", rates.range, "Geometric sweep: START STOP POINTS")->expected(3);
    c_rates->add_option("--receiver", rates.receiver, "mrc, zf or mmse-empirical");
    c_rates->add_flag("--empirical", rates.empirical, "Add Monte Carlo rate columns");
    c_rates->add_option("--trials", rates.trials, "Monte Carlo trials per point");
    c_rates->add_option("--seed", rates.seed, "Master seed");
    add_common(c_rates, common);

    DofArgs dof;
    auto* c_dof = app.add_subcommand(
        "dof", "Degrees of freedom: theorem value and high-SNR slope. The default window is "
               "P = 2^10..2^30 in steps of 4x");
    c_dof->add_option("--m", dof.M, "Receive antennas")->required();
    c_dof->add_option("--k", dof.K, "Number of users")->required();
    c_dof->add_option("--t", dof.T, "Coherence interval")->required();
    c_dof->add_option("--scheme", dof.scheme, "zf, mrc, mac or mmse");
    c_dof->add_option("--trials", dof.trials, "Monte Carlo trials per point (mac, mmse)");
    c_dof->add_option("--seed", dof.seed, "Master seed");
    c_dof->add_option("--grid-lo", dof.grid_lo, "Smallest power in the slope window");
    c_dof->add_option("--grid-hi", dof.grid_hi, "Largest power in the slope window");
    c_dof->add_option("--grid-ratio", dof.grid_ratio, "Geometric step of the slope window");
    add_common(c_dof, common);

    PowerArgs power;
    auto* c_power = app.add_subcommand(
        "power", "Required power for a fixed per-user rate. The exact solver bisects over "
                 "P in [1e-12, 1e6] (200 steps) to a relative rate tolerance of 1e-9");
    c_power->add_option("--r", power.R, "Target per-user rate (bits/channel use)")->required();
    c_power->add_option("--k", power.K, "Number of users")->required();
    c_power->add_option("--t", power.T, "Coherence interval")->required();
    c_power->add_option("--receiver", power.receiver, "mrc or zf");
    c_power->add_option("--m", power.m_values, "Receive antenna counts (increasing)")->required();
    add_common(c_power, common);

    SimulateArgs sim;
    double sim_alpha = -1.0;
    auto* c_sim = app.add_subcommand("simulate", "Monte Carlo ergodic rates per receiver");
    c_sim->add_option("--m", sim.M, "Receive antennas")->required();
    c_sim->add_option("--k", sim.K, "Number of users")->required();
    c_sim->add_option("--t", sim.T, "Coherence interval")->required();
    c_sim->add_option("--p", sim.P, "Average transmit power per user")->required();
    auto* alpha_opt =
        c_sim->add_option("--alpha", sim_alpha, "Training fraction (default: optimized)");
    c_sim->add_option("--receiver", sim.receiver, "mrc, zf, mmse or all");
    c_sim->add_option("--trials", sim.trials, "Monte Carlo trials");
    c_sim->add_option("--seed", sim.seed, "Master seed");
    c_sim->add_flag("--per-trial", sim.per_trial, "Emit one record per trial");
    add_common(c_sim, common);

    auto* c_self = app.add_subcommand("selftest", "Fast property checks");
    add_common(c_self, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (alpha_opt->count() > 0) sim.alpha = sim_alpha;

    try {
        if (c_split->parsed()) return cmd_split(split, common, out, err);
        if (c_rates->parsed()) return cmd_rates(rates, common, out, err);
        if (c_dof->parsed()) return cmd_dof(dof, common, out, err);
        if (c_power->parsed()) return cmd_power(power, common, out, err);
        if (c_sim->parsed()) return cmd_simulate(sim, common, out, err);
        if (c_self->parsed()) return cmd_selftest(common, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace mmimo::cli
