#include "driftwalk/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "driftwalk/errors.hpp"
#include "driftwalk/interval_sums.hpp"
#include "driftwalk/numeric.hpp"
#include "driftwalk/rng.hpp"

namespace driftwalk {

namespace {

void check_drift_count(std::size_t n, std::size_t k) {
    if (n == 0 || k > n - 1) {
        throw std::domain_error("drift count k = " + std::to_string(k) + " is outside [0, N-1]");
    }
}

// E^0(T_N) for strong drifts at `positions`, reusing one omega buffer.
double origin_time(std::vector<double>& omega, std::size_t n,
                   const std::vector<std::size_t>& positions, const DriftParams& params) {
    std::fill(omega.begin(), omega.end(), params.q);
    for (std::size_t s : positions) omega[s - 1] = params.p;
    return hitting_time_recurrence(Environment(n, omega)).from_origin();
}

// Advances `combo` (sorted, values in [1, top]) to the next k-subset in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& combo, std::size_t top) {
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < top - (k - 1 - i)) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::size_t> equally_spaced_positions(std::size_t m, std::size_t k) {
    if (k > m) throw std::domain_error("cannot place more drifts than sites");
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) out.push_back(i * m / k);
    return out;
}

DriftPlacement equally_spaced(std::size_t n, std::size_t k, DriftParams params) {
    if (n < 2 || k < 1 || k > n - 1) {
        throw std::domain_error("equally spaced placement needs 1 <= k <= N-1");
    }
    return DriftPlacement(n, equally_spaced_positions(n - 1, k), params);
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // out * (n - k + i) / i stays integral at every step.
        const std::uint64_t factor = n - k + i;
        const std::uint64_t g = std::gcd(out, static_cast<std::uint64_t>(i));
        const std::uint64_t reduced = out / g;
        const std::uint64_t divisor = i / g;
        const std::uint64_t f = factor / divisor;  // divisor | factor after reduction
        if (reduced > kMax / f) return kMax;
        out = reduced * f;
    }
    return out;
}

OptimizationResult brute_force_best(std::size_t n, std::size_t k, DriftParams params,
                                    std::uint64_t budget) {
    params.validate();
    check_drift_count(n, k);
    const std::uint64_t required = binomial(n - 1, k);
    if (required > budget) {
        throw BudgetExceeded("exhaustive search needs " + std::to_string(required) +
                                 " placements, budget is " + std::to_string(budget),
                             required, budget);
    }

    std::vector<double> omega(n - 1);
    OptimizationResult out;
    std::vector<std::size_t> combo(k);
    std::iota(combo.begin(), combo.end(), std::size_t{1});
    do {
        const double time = origin_time(omega, n, combo, params);
        ++out.candidates_examined;
        // Enumeration is lexicographic, so only a clear improvement displaces
        // an earlier candidate.
        if (out.candidates_examined == 1 ||
            (time < out.best_time && !approx_equal(time, out.best_time))) {
            out.best_time = time;
            out.best_positions = combo;
        }
    } while (next_combination(combo, n - 1));

    out.equally_spaced_positions = equally_spaced_positions(n - 1, k);
    out.equally_spaced_time = origin_time(omega, n, out.equally_spaced_positions, params);
    out.gap = std::max(0.0, out.equally_spaced_time - out.best_time);
    return out;
}

std::vector<std::size_t> random_positions(std::size_t n, std::size_t k, std::uint64_t seed,
                                          std::uint64_t trial) {
    check_drift_count(n, k);
    std::vector<std::size_t> sites(n - 1);
    std::iota(sites.begin(), sites.end(), std::size_t{1});
    rng::SplitMix64 gen(rng::stream_key(seed, trial));
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + gen.below(sites.size() - i);
        std::swap(sites[i], sites[j]);
    }
    sites.resize(k);
    std::sort(sites.begin(), sites.end());
    return sites;
}

GapReport theorem_gap_check(std::size_t n, std::size_t k, DriftParams params,
                            std::size_t trials, std::uint64_t seed) {
    params.validate();
    if (n < 2) throw std::domain_error("gap check needs N >= 2");
    if (trials < 1) throw ValidationError("gap check needs at least one trial", "trials");
    check_drift_count(n, k);

    GapReport out;
    out.n = n;
    out.k = k;
    out.params = params;
    out.trials = trials;
    out.seed = seed;
    out.floor = -2.0 * bound_constant(params.alpha()) / static_cast<double>(n);

    std::vector<double> omega(n - 1);
    out.equally_spaced_positions = equally_spaced_positions(n - 1, k);
    out.equally_spaced_time = origin_time(omega, n, out.equally_spaced_positions, params);

    out.gaps.reserve(trials);
    out.placements.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        auto positions = random_positions(n, k, seed, t);
        const double time = origin_time(omega, n, positions, params);
        const double gap = (time - out.equally_spaced_time) / static_cast<double>(n);
        out.gaps.push_back(gap);
        out.placements.push_back(std::move(positions));
        if (gap < 0.0) ++out.negative_gaps;
    }
    out.min_gap = *std::min_element(out.gaps.begin(), out.gaps.end());
    return out;
}

std::uint64_t epsilon_horizon(double alpha, double epsilon) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("horizon needs 0 < alpha < 1");
    if (!(epsilon > 0.0)) throw std::domain_error("horizon needs epsilon > 0");
    const double ratio = 2.0 * bound_constant(alpha) / epsilon;
    // Absorb last-bit rounding so that e.g. 2 C(2/3) / 1 lands on 12, not 13.
    const double nearest = std::round(ratio);
    const double horizon = approx_equal(ratio, nearest, 1e-12, 0.0) ? nearest : std::ceil(ratio);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(horizon));
}

}  // namespace driftwalk
