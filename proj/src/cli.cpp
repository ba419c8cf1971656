#include "driftwalk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "driftwalk/environment.hpp"
#include "driftwalk/errors.hpp"
#include "driftwalk/interval_sums.hpp"
#include "driftwalk/limit.hpp"
#include "driftwalk/numeric.hpp"
#include "driftwalk/placement.hpp"
#include "driftwalk/simulator.hpp"
#include "driftwalk/spec_file.hpp"

namespace driftwalk::cli {

namespace {

using nlohmann::json;

struct HitTimeArgs {
    std::string spec;
    std::size_t start = 0;
    std::string method = "recurrence";
};

struct OptimizeArgs {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string q;
    std::string p;
    std::string mode = "brute";
    std::uint64_t budget = kDefaultBruteForceBudget;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    bool csv = false;
};

struct LimitArgs {
    unsigned a = 1;
    std::string q;
    std::string p;
    std::vector<std::size_t> k_list{50, 100, 200, 400, 1000};
    bool csv = false;
};

struct SimulateArgs {
    std::string spec;
    std::size_t walks = 100000;
    std::uint64_t seed = 0;
    std::uint64_t max_steps = 0;
    unsigned threads = 1;
};

struct SumsArgs {
    std::string spec;
    bool truncate = false;
};

DriftParams drift_params(const std::string& q, const std::string& p, json& record) {
    const auto qp = parse_probability(q, "q");
    const auto pp = parse_probability(p, "p");
    record["q"] = qp.text;
    record["p"] = pp.text;
    DriftParams params{qp.value, pp.value};
    params.validate();
    record["alpha"] = params.alpha();
    record["beta"] = params.beta();
    return params;
}

std::string join_positions(const std::vector<std::size_t>& positions) {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(positions[i]);
    }
    return out;
}

std::string csv_number(double x) {
    return json(x).dump();
}

int cmd_hit_time(const HitTimeArgs& args, std::ostream& out) {
    const auto spec = load_spec(args.spec);
    const auto env = spec.environment();
    if (args.start > env.n()) {
        throw ValidationError("start site " + std::to_string(args.start) + " is outside [0, " +
                                  std::to_string(env.n()) + "]",
                              "start");
    }

    HittingTimeProfile profile;
    if (args.method == "formula") {
        profile = hitting_time_formula_profile(env);
    } else if (args.method == "recurrence") {
        profile = hitting_time_recurrence(env);
    } else {
        profile = hitting_time_linear_solve(env);
    }

    json record;
    record["command"] = "hit-time";
    record["spec"] = spec_to_json(spec);
    record["start"] = args.start;
    record["method"] = args.method;
    record["E"] = profile.v[args.start];
    record["v"] = profile.v;
    record["a"] = profile.a;
    out << record.dump() << '\n';
    return kOk;
}

int cmd_optimize(const OptimizeArgs& args, std::ostream& out) {
    json record;
    record["command"] = "optimize";
    record["mode"] = args.mode;
    record["n"] = args.n;
    record["k"] = args.k;
    const auto params = drift_params(args.q, args.p, record);
    const double n = static_cast<double>(args.n);

    if (args.mode == "brute") {
        const auto result = brute_force_best(args.n, args.k, params, args.budget);
        if (args.csv) {
            out << "n,k,q,p,best_positions,best_time,equally_spaced_positions,"
                   "equally_spaced_time,gap,candidates_examined\n";
            out << args.n << ',' << args.k << ',' << record["q"].get<std::string>() << ','
                << record["p"].get<std::string>() << ',' << join_positions(result.best_positions)
                << ',' << csv_number(result.best_time) << ','
                << join_positions(result.equally_spaced_positions) << ','
                << csv_number(result.equally_spaced_time) << ',' << csv_number(result.gap) << ','
                << result.candidates_examined << '\n';
            return kOk;
        }
        record["budget"] = args.budget;
        record["best_positions"] = result.best_positions;
        record["best_time"] = result.best_time;
        record["candidates_examined"] = result.candidates_examined;
        record["equally_spaced_positions"] = result.equally_spaced_positions;
        record["equally_spaced_time"] = result.equally_spaced_time;
        record["gap"] = result.gap;
        record["normalized_gap"] = result.gap / n;
        out << record.dump() << '\n';
        return kOk;
    }

    const auto report = theorem_gap_check(args.n, args.k, params, args.trials, args.seed);
    if (args.csv) {
        out << "trial,normalized_gap,positions\n";
        for (std::size_t t = 0; t < report.trials; ++t) {
            out << t << ',' << csv_number(report.gaps[t]) << ','
                << join_positions(report.placements[t]) << '\n';
        }
    } else {
        record["trials"] = report.trials;
        record["seed"] = report.seed;
        record["equally_spaced_positions"] = report.equally_spaced_positions;
        record["equally_spaced_time"] = report.equally_spaced_time;
        record["min_gap"] = report.min_gap;
        record["floor"] = report.floor;
        record["within_bound"] = report.within_bound();
        record["negative_gaps"] = report.negative_gaps;
        record["gaps"] = report.gaps;
        out << record.dump() << '\n';
    }
    if (!report.within_bound()) {
        throw InvariantViolation("normalized gap " + std::to_string(report.min_gap) +
                                 " fell to the floor " + std::to_string(report.floor));
    }
    return kOk;
}

int cmd_limit(const LimitArgs& args, std::ostream& out) {
    json record;
    record["command"] = "limit";
    record["a"] = args.a;
    const auto drifts = drift_params(args.q, args.p, record);
    const LimitParams params(args.a, drifts);

    const double series = speed_limit_series(params);
    record["s_zero"] = s_zero(params);
    record["series_inner_sum"] = series_inner_sum(params);
    record["L_series"] = series;
    try {
        const double printed = speed_limit_printed(params);
        record["printed_inner_ratio"] = printed_inner_ratio(params);
        record["L_printed"] = printed;
        record["printed_singular"] = false;
        record["printed_discrepancy"] = !approx_equal(printed, series);
    } catch (const SingularityError&) {
        record["printed_inner_ratio"] = nullptr;
        record["L_printed"] = nullptr;
        record["printed_singular"] = true;
        record["printed_discrepancy"] = true;
    }

    json rows = json::array();
    for (std::size_t k : args.k_list) {
        const double speed = finite_k_speed(args.a, k, drifts);
        rows.push_back({{"k", k},
                        {"n", static_cast<std::size_t>(args.a) * k},
                        {"speed", speed},
                        {"abs_error", std::abs(speed - series)}});
    }

    if (args.csv) {
        out << "k,n,speed,abs_error\n";
        for (const auto& row : rows) {
            out << row["k"].get<std::size_t>() << ',' << row["n"].get<std::size_t>() << ','
                << row["speed"].dump() << ',' << row["abs_error"].dump() << '\n';
        }
        return kOk;
    }
    record["finite_k"] = std::move(rows);
    out << record.dump() << '\n';
    return kOk;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
    const auto spec = load_spec(args.spec);
    const auto env = spec.environment();
    const auto report = simulate(env, {args.walks, args.seed, args.max_steps, args.threads});
    const double exact = hitting_time_recurrence(env).from_origin();

    json record;
    record["command"] = "simulate";
    record["spec"] = spec_to_json(spec);
    record["walks"] = report.walks;
    record["seed"] = report.seed;
    record["max_steps"] = report.max_steps;
    record["mean"] = report.mean;
    record["std_error"] = report.std_error;
    record["truncations"] = report.truncations;
    record["biased_low"] = report.biased_low();
    record["exact"] = exact;
    if (report.truncations == 0) {
        const auto parity = parity_check(report, exact);
        record["z"] = std::isfinite(parity.z) ? json(parity.z) : json(nullptr);
        record["parity_pass"] = parity.pass;
    } else {
        record["z"] = nullptr;
        record["parity_pass"] = nullptr;
    }
    out << record.dump() << '\n';
    return kOk;
}

int cmd_sums(const SumsArgs& args, std::ostream& out) {
    const auto spec = load_spec(args.spec);
    if (spec.n < 2) throw ValidationError("circle sums need n >= 2", "n");
    const SumOptions options{args.truncate};
    const auto placement = spec.placement();
    const auto report = placement ? circle_sum_report(*placement, options)
                                  : circle_sum_report(spec.environment(), options);

    // The circle and interval sums come from separate routes; allow the
    // usual rounding slack when their true difference is zero.
    const double slack = kAbsTol + kAbsTol * report.s_tilde;
    const double diff = report.s_tilde - report.s;
    if (!options.truncate && (diff < -slack || diff > report.bound + slack)) {
        throw InvariantViolation("circle sandwich failed: S~ - S = " + std::to_string(diff) +
                                 ", C = " + std::to_string(report.bound));
    }

    json record;
    record["command"] = "sums";
    record["spec"] = spec_to_json(spec);
    record["truncated"] = options.truncate;
    record["S"] = report.s;
    record["S_tilde"] = report.s_tilde;
    record["difference"] = diff;
    record["C_alpha"] = report.bound;
    record["sigma"] = report.sigma;
    out << record.dump() << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hitting times and drift placement for walks in two-drift environments",
                 "driftwalk"};
    app.require_subcommand(1);

    HitTimeArgs hit;
    auto* hit_cmd = app.add_subcommand("hit-time", "Expected hitting time of N and full profile");
    hit_cmd->add_option("spec", hit.spec, "Environment spec file (JSON)")->required();
    hit_cmd->add_option("--start", hit.start, "Start site x in [0, N]");
    hit_cmd->add_option("--method", hit.method, "formula | recurrence | solve")
        ->check(CLI::IsMember({"formula", "recurrence", "solve"}));

    OptimizeArgs opt;
    auto* opt_cmd = app.add_subcommand("optimize", "Best placement of k strong drifts");
    opt_cmd->add_option("--n", opt.n, "Site count N")->required();
    opt_cmd->add_option("--k", opt.k, "Number of strong drifts")->required();
    opt_cmd->add_option("--q", opt.q, "Weak drift probability (decimal or a/b)")->required();
    opt_cmd->add_option("--p", opt.p, "Strong drift probability (decimal or a/b)")->required();
    opt_cmd->add_option("--mode", opt.mode, "brute | sample")
        ->check(CLI::IsMember({"brute", "sample"}));
    opt_cmd->add_option("--budget", opt.budget, "Maximum placements in brute mode");
    opt_cmd->add_option("--trials", opt.trials, "Random placements in sample mode");
    opt_cmd->add_option("--seed", opt.seed, "Sampling seed");
    opt_cmd->add_flag("--csv", opt.csv, "Emit a CSV table instead of a JSON record");

    LimitArgs lim;
    auto* lim_cmd = app.add_subcommand("limit", "Asymptotic time per site for gap-a placements");
    lim_cmd->add_option("--a", lim.a, "Sites per strong drift")->required();
    lim_cmd->add_option("--q", lim.q, "Weak drift probability (decimal or a/b)")->required();
    lim_cmd->add_option("--p", lim.p, "Strong drift probability (decimal or a/b)")->required();
    lim_cmd->add_option("--k-list", lim.k_list, "Drift counts for the finite-k table")
        ->delimiter(',');
    lim_cmd->add_flag("--csv", lim.csv, "Emit the convergence table as CSV");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo hitting time with parity check");
    sim_cmd->add_option("spec", sim.spec, "Environment spec file (JSON)")->required();
    sim_cmd->add_option("--walks", sim.walks, "Number of independent walks");
    sim_cmd->add_option("--seed", sim.seed, "Base seed");
    sim_cmd->add_option("--max-steps", sim.max_steps, "Per-walk step cap (0 = default)");
    sim_cmd->add_option("--threads", sim.threads, "Worker threads");

    SumsArgs sums;
    auto* sums_cmd = app.add_subcommand("sums", "Interval sum, circle sum and sigma_d slices");
    sums_cmd->add_option("spec", sums.spec, "Environment spec file (JSON)")->required();
    sums_cmd->add_flag("--truncate-sums", sums.truncate,
                       "Stop sigma_d once m alpha^d < 1e-15");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (*hit_cmd) return cmd_hit_time(hit, out);
        if (*opt_cmd) return cmd_optimize(opt, out);
        if (*lim_cmd) return cmd_limit(lim, out);
        if (*sim_cmd) return cmd_simulate(sim, out);
        if (*sums_cmd) return cmd_sums(sums, out);
        return kValidation;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ValidationError& e) {
        err << "validation error";
        if (!e.field().empty()) err << " in '" << e.field() << "'";
        err << ": " << e.what() << '\n';
        return kValidation;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << " (required " << e.required() << ")\n";
        return kBudget;
    } catch (const SizeError& e) {
        err << "size error: " << e.what() << '\n';
        return kBudget;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::invalid_argument& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::domain_error& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
}

}  // namespace driftwalk::cli
