// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "driftwalk/environment.hpp"
#include "driftwalk/interval_sums.hpp"
#include "driftwalk/limit.hpp"
#include "driftwalk/numeric.hpp"
#include "driftwalk/placement.hpp"
#include "driftwalk/simulator.hpp"
#include "oracles.hpp"

using namespace driftwalk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    double time_limit_s;  // 0 = no limit
    std::function<Outcome()> body;
};

std::vector<Environment> random_environments() {
    std::mt19937_64 gen(20240601);
    std::vector<Environment> out;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + gen() % 300;
        out.emplace_back(n, oracle::random_omega(gen, n));
    }
    return out;
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

Outcome oracle_triple_agreement() {
    double worst = 0.0;
    std::size_t bad = 0;
    for (const auto& env : random_environments()) {
        const auto rec = hitting_time_recurrence(env);
        const auto sol = hitting_time_linear_solve(env);
        for (std::size_t x = 0; x <= env.n(); ++x) {
            const double f = hitting_time_formula(env, x);
            const double scale = std::max({std::abs(f), std::abs(rec.v[x]), std::abs(sol.v[x])});
            const double spread =
                std::max({std::abs(f - rec.v[x]), std::abs(f - sol.v[x]), std::abs(rec.v[x] - sol.v[x])});
            if (scale > 0) worst = std::max(worst, spread / scale);
            if (!approx_equal(f, rec.v[x]) || !approx_equal(f, sol.v[x]) ||
                !approx_equal(rec.v[x], sol.v[x])) {
                ++bad;
            }
        }
    }
    return {bad == 0, fmt("worst relative spread %.3g, %g disagreements", worst, double(bad))};
}

Outcome reflection_corollary() {
    double worst = 0.0;
    bool ok = true;
    for (const auto& env : random_environments()) {
        const double e = hitting_time_recurrence(env).from_origin();
        const double r = hitting_time_recurrence(reflect(env)).from_origin();
        const double rel = std::abs(e - r) / (1.0 + e);
        worst = std::max(worst, rel);
        if (rel > 1e-10) ok = false;
    }
    return {ok, fmt("worst |E'-E|/(1+E) = %.3g", worst)};
}

Outcome circle_sandwich() {
    std::mt19937_64 gen(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    bool ok = true;
    double max_ratio = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + gen() % 499;
        const double q = 0.5 + 0.49 * u(gen) + 0.005;
        const double p = q + (1.0 - q) * (0.02 + 0.96 * u(gen));
        const std::size_t k = gen() % n;
        const DriftPlacement placement(n, random_positions(n, k, gen(), 0), {q, p});
        const auto report = circle_sum_report(placement);
        const double diff = report.s_tilde - report.s;
        const double bound = bound_constant(placement.params().alpha());
        if (!(diff >= 0.0 && diff <= bound)) ok = false;
        max_ratio = std::max(max_ratio, diff / bound);
    }
    return {ok, fmt("max (S~ - S) / C(alpha) = %.4f", max_ratio)};
}

Outcome exhaustive_circle_optimality() {
    std::size_t violations = 0;
    std::size_t checked = 0;
    for (auto [alpha, beta] : {std::pair{0.5, 0.25}, {2.0 / 3.0, 1.0 / 9.0}}) {
        for (std::size_t m = 1; m <= 12; ++m) {
            for (std::size_t k = 0; k <= m; ++k) {
                const auto eq = equally_spaced_positions(m, k);
                const auto all = oracle::subsets(m, k);
                for (std::size_t d = 1; d <= m; ++d) {
                    const auto eq_counts = drift_counts(m, eq, d);
                    if (!is_almost_constant(eq_counts)) ++violations;
                    const double best = sigma_d(eq_counts, alpha, beta);
                    for (const auto& s : all) {
                        ++checked;
                        if (sigma_d(drift_counts(m, s, d), alpha, beta) < best - 1e-12) ++violations;
                    }
                }
            }
        }
    }
    return {violations == 0,
            fmt("%g (placement, d) pairs checked, %g violations", double(checked), double(violations))};
}

Outcome theorem_bound() {
    const auto report = theorem_gap_check(2000, 50, {0.6, 0.9}, 100, 20240601);
    bool ok = std::abs(report.floor - (-0.006)) < 1e-12;
    for (double g : report.gaps) ok = ok && g > report.floor;
    return {ok, fmt("min gap %.6g (floor -0.006); negative gaps observed: %g", report.min_gap,
                    double(report.negative_gaps))};
}

Outcome limit_convergence() {
    const DriftParams drifts{2.0 / 3.0, 0.8};
    const LimitParams params(2, drifts);
    const double series = speed_limit_series(params);
    bool ok = std::abs(series - 15.0 / 7.0) < 1e-12;
    double previous = INFINITY;
    std::string table;
    for (std::size_t k : {50u, 100u, 200u, 400u, 1000u}) {
        const double err = std::abs(finite_k_speed(2, k, drifts) - 15.0 / 7.0);
        ok = ok && err < previous;
        previous = err;
        table += " k=" + std::to_string(k) + ":" + fmt("%.3g", err);
    }
    ok = ok && previous < 0.01;
    const double printed = speed_limit_printed(params);
    table += fmt("; printed formula gives %.6f (flagged: disagrees with %.6f)", printed, series);
    return {ok, "errors" + table};
}

Outcome a_one_collapse() {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double p = 0.52 + 0.024 * i;  // up to 0.976
        const double q = 0.5 + (p - 0.5) * (0.1 + 0.04 * i);
        const double expected = 1.0 / (2.0 * p - 1.0);
        const double got = speed_limit_series(LimitParams(1, {q, p}));
        worst = std::max(worst, std::abs(got - expected));
        if (std::abs(got - expected) > 1e-12) ok = false;
    }
    return {ok, fmt("worst |L - 1/(2p-1)| = %.3g", worst)};
}

Outcome monte_carlo_parity() {
    std::mt19937_64 gen(4242);
    int excursions = 0;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + gen() % 30;
        const Environment env(n, oracle::random_omega(gen, n));
        const auto report = simulate(env, {100000, 1000 + static_cast<std::uint64_t>(i)});
        if (report.truncations > 0) return {false, "truncated walks"};
        const auto parity = parity_check(report, hitting_time_recurrence(env).from_origin());
        worst = std::max(worst, std::abs(parity.z));
        if (!parity.pass) ++excursions;
    }
    return {excursions <= 1, fmt("max |z| = %.3f, excursions %g", worst, double(excursions))};
}

Outcome small_n_ledger() {
    const auto result = brute_force_best(4, 1, {0.6, 0.9});
    const double best = 4.0 + 266.0 / 81.0;
    const double eq = 4.0 + 326.0 / 81.0;
    const bool ok = result.best_positions == std::vector<std::size_t>{2} &&
                    approx_equal(result.best_time, best) &&
                    result.equally_spaced_positions == std::vector<std::size_t>{3} &&
                    approx_equal(result.equally_spaced_time, eq) &&
                    approx_equal(result.gap, 60.0 / 81.0);
    return {ok, fmt("best {2} E=%.6f, equally spaced {3} E=%.6f", result.best_time,
                    result.equally_spaced_time) +
                    fmt(", gap %.6f", result.gap)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "oracle triple agreement", 5.0, oracle_triple_agreement},
        {"AC2", "reflection symmetry", 0.0, reflection_corollary},
        {"AC3", "circle sandwich", 10.0, circle_sandwich},
        {"AC4", "exhaustive circle optimality", 60.0, exhaustive_circle_optimality},
        {"AC5", "gap bound N=2000 k=50", 10.0, theorem_bound},
        {"AC6", "limit convergence a=2", 0.0, limit_convergence},
        {"AC7", "a=1 collapse", 0.0, a_one_collapse},
        {"AC8", "Monte Carlo parity", 30.0, monte_carlo_parity},
        {"AC9", "small-N argmin ledger", 0.0, small_n_ledger},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.body();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
            outcome.pass = false;
            outcome.detail += " [over time limit]";
        }
        if (!outcome.pass) ++failures;
        std::printf("[%s] %s %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title,
                    outcome.detail.c_str(), seconds);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
