#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "driftwalk/environment.hpp"

namespace driftwalk {

/// Strong-drift counts n_i^(d) over the circular windows of length d on Z_m.
///
/// Window i (1 <= i <= m) covers the sites {((i - 1 + t) mod m) + 1 : 0 <= t < d}.
/// counts[i - 1] holds n_i^(d).
struct IntervalCountProfile {
    std::size_t m = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    std::vector<std::size_t> counts;
};

/// S_N, the glued circle sum, C(alpha) and the per-length slices sigma_d.
struct CircleSumReport {
    double s = 0.0;
    double s_tilde = 0.0;
    double bound = 0.0;
    /// sigma[d - 1] for d = 1..N-1 (shorter when truncated).
    std::vector<double> sigma;
};

struct SumOptions {
    /// Stop at the first d with m * alpha^d < kSigmaTruncation. Off by
    /// default so results do not depend on the threshold.
    bool truncate = false;
};

inline constexpr double kSigmaTruncation = 1e-15;

/// S_N = sum_{i=1}^{N-1} sum_{j=1}^{i} prod_{k=j}^{i} rho_k, so that E^0(T_N) = N + 2 S_N.
double interval_sum(const Environment& env);

/// Maps any non-negative site label to its canonical representative in
/// [1, m] (0 and m name the same point).
std::size_t circle_site(std::size_t m, std::size_t position);

IntervalCountProfile drift_counts(std::size_t m, std::span<const std::size_t> positions,
                                  std::size_t d);
/// Counts on the glued circle Z_{N-1}.
IntervalCountProfile drift_counts(const DriftPlacement& placement, std::size_t d);

/// sigma_d = alpha^d * sum_i (beta/alpha)^{n_i^(d)}, with 0^0 = 1.
double sigma_d(const IntervalCountProfile& counts, double alpha, double beta);
double sigma_d(const DriftPlacement& placement, std::size_t d);

/// All sigma_d on the glued circle, from window counts.
std::vector<double> circle_sigmas(const DriftPlacement& placement, SumOptions options = {});
/// All sigma_d on the glued circle, from running products of rho over each
/// window. Works for arbitrary environments.
std::vector<double> circle_sigmas(const Environment& env, SumOptions options = {});

/// Glued circle sum S~_N = sum_d sigma_d.
double circle_sum(const DriftPlacement& placement, SumOptions options = {});
double circle_sum(const Environment& env, SumOptions options = {});

/// S~_N - S_N as the sum over windows that wrap past site N-1:
/// sum_{d=1}^{N-1} sum_{j=N-d+1}^{N-1} prod_{k=j}^{j+d-1} rho~_k.
double wrap_sum(const Environment& env);

/// C(alpha) = sum_{d>=1} d alpha^d = alpha / (1 - alpha)^2, for 0 <= alpha < 1.
double bound_constant(double alpha);

CircleSumReport circle_sum_report(const DriftPlacement& placement, SumOptions options = {});
/// Uses alpha = max rho_i for the bound; requires every omega(i) > 1/2.
CircleSumReport circle_sum_report(const Environment& env, SumOptions options = {});

/// max(counts) - min(counts) <= 1.
bool is_almost_constant(const IntervalCountProfile& profile);

}  // namespace driftwalk
