#pragma once

#include <cstddef>
#include <cstdint>

#include "driftwalk/environment.hpp"

namespace driftwalk {

struct SimulationOptions {
    std::size_t walks = 0;
    std::uint64_t seed = 0;
    /// Per-walk step cap; 0 selects default_max_steps(env).
    std::uint64_t max_steps = 0;
    /// Worker threads. The report does not depend on this.
    unsigned threads = 1;
};

struct SimulationReport {
    std::size_t n = 0;
    std::size_t walks = 0;
    double mean = 0.0;
    /// Standard error of the mean, sqrt(sample variance / walks).
    double std_error = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t max_steps = 0;
    /// Walks stopped at max_steps. Their capped length enters the mean.
    std::size_t truncations = 0;

    bool biased_low() const noexcept { return truncations > 0; }
};

struct WalkOutcome {
    std::uint64_t steps = 0;
    bool truncated = false;
};

struct ParityResult {
    double z = 0.0;
    bool pass = false;
};

inline constexpr double kParityZ = 4.0;

/// 100 N / (2 q - 1) with q the smallest omega(i); falls back to 100 N^2 when
/// some omega(i) <= 1/2. Never below N.
std::uint64_t default_max_steps(const Environment& env);

/// One walk from site 0, driven by the stream keyed by (seed, index).
WalkOutcome simulate_walk(const Environment& env, std::uint64_t seed, std::uint64_t index,
                          std::uint64_t max_steps);

/// Runs walks 0..walks-1 and aggregates their lengths in index order.
SimulationReport simulate(const Environment& env, const SimulationOptions& options);

/// z = (mean - exact) / std_error, passing when |z| <= 4. A zero standard
/// error passes only when the mean matches exact.
ParityResult parity_check(const SimulationReport& report, double exact);

}  // namespace driftwalk
