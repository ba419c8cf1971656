#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "driftwalk/environment.hpp"

namespace driftwalk {

inline constexpr std::uint64_t kDefaultBruteForceBudget = 2'000'000;

struct OptimizationResult {
    std::vector<std::size_t> best_positions;
    double best_time = 0.0;
    std::uint64_t candidates_examined = 0;
    std::vector<std::size_t> equally_spaced_positions;
    double equally_spaced_time = 0.0;
    /// equally_spaced_time - best_time, never negative.
    double gap = 0.0;
};

/// Normalized gaps (E_omega - E_eq) / N over seeded random placements,
/// compared against the floor -2 C(alpha) / N.
struct GapReport {
    std::size_t n = 0;
    std::size_t k = 0;
    DriftParams params{};
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> equally_spaced_positions;
    double equally_spaced_time = 0.0;
    /// One entry per trial, in trial order.
    std::vector<double> gaps;
    /// Sampled placements, parallel to gaps.
    std::vector<std::vector<std::size_t>> placements;
    double min_gap = 0.0;
    double floor = 0.0;
    std::size_t negative_gaps = 0;

    bool within_bound() const noexcept { return min_gap > floor; }
};

/// floor(i * m / k) for i = 1..k; on a circle of size m the last one is m,
/// which is the glued point. Empty when k = 0. Requires k <= m.
std::vector<std::size_t> equally_spaced_positions(std::size_t m, std::size_t k);

/// The evenly spread placement with strong drifts at floor(i (N-1) / k).
/// Requires 1 <= k <= N-1.
DriftPlacement equally_spaced(std::size_t n, std::size_t k, DriftParams params);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Exhaustive search over all C(N-1, k) placements for the smallest E^0(T_N).
/// Ties (within the default relative tolerance) go to the lexicographically
/// smallest position list. Throws BudgetExceeded before evaluating anything
/// when C(N-1, k) > budget.
OptimizationResult brute_force_best(std::size_t n, std::size_t k, DriftParams params,
                                    std::uint64_t budget = kDefaultBruteForceBudget);

/// Uniform k-subset of [1, N-1] for the given trial, drawn by a partial
/// Fisher-Yates shuffle on a stream keyed by (seed, trial). Sorted.
std::vector<std::size_t> random_positions(std::size_t n, std::size_t k, std::uint64_t seed,
                                          std::uint64_t trial);

GapReport theorem_gap_check(std::size_t n, std::size_t k, DriftParams params,
                            std::size_t trials, std::uint64_t seed);

/// Smallest N beyond which the normalized gap floor 2 C(alpha) / N drops below
/// epsilon: ceil(2 C(alpha) / epsilon), at least 1.
std::uint64_t epsilon_horizon(double alpha, double epsilon);

}  // namespace driftwalk
