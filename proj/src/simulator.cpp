#include "driftwalk/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "driftwalk/errors.hpp"
#include "driftwalk/numeric.hpp"
#include "driftwalk/rng.hpp"

namespace driftwalk {

std::uint64_t default_max_steps(const Environment& env) {
    const auto probs = env.probabilities();
    const double n = static_cast<double>(env.n());
    double cap = 100.0 * n * n;
    if (!probs.empty()) {
        const double q = *std::min_element(probs.begin(), probs.end());
        if (q > 0.5) cap = 100.0 * n / (2.0 * q - 1.0);
    } else {
        cap = 100.0 * n;
    }
    cap = std::min(cap, 1e18);
    return std::max<std::uint64_t>(env.n(), static_cast<std::uint64_t>(std::ceil(cap)));
}

WalkOutcome simulate_walk(const Environment& env, std::uint64_t seed, std::uint64_t index,
                          std::uint64_t max_steps) {
    rng::SplitMix64 gen(rng::stream_key(seed, index));
    const auto probs = env.probabilities();
    const std::size_t n = env.n();
    std::size_t site = 0;
    std::uint64_t steps = 0;
    while (site != n) {
        if (steps == max_steps) return {steps, true};
        if (site == 0) {
            site = 1;
        } else if (gen.uniform() < probs[site - 1]) {
            ++site;
        } else {
            --site;
        }
        ++steps;
    }
    return {steps, false};
}

SimulationReport simulate(const Environment& env, const SimulationOptions& options) {
    if (options.walks < 1) throw ValidationError("walks must be at least 1", "walks");
    const std::uint64_t max_steps =
        options.max_steps == 0 ? default_max_steps(env) : options.max_steps;
    if (max_steps < env.n()) {
        throw ValidationError("max_steps must be at least N", "max_steps");
    }

    std::vector<WalkOutcome> outcomes(options.walks);
    const auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            outcomes[j] = simulate_walk(env, options.seed, j, max_steps);
        }
    };

    const std::size_t threads =
        std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, options.walks));
    if (threads == 1) {
        run_range(0, options.walks);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (options.walks + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(options.walks, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
    }

    SimulationReport report;
    report.n = env.n();
    report.walks = options.walks;
    report.seed = options.seed;
    report.max_steps = max_steps;

    double sum = 0.0;
    for (const auto& o : outcomes) {
        sum += static_cast<double>(o.steps);
        if (o.truncated) ++report.truncations;
    }
    report.mean = sum / static_cast<double>(options.walks);
    if (options.walks > 1) {
        double squares = 0.0;
        for (const auto& o : outcomes) {
            const double dev = static_cast<double>(o.steps) - report.mean;
            squares += dev * dev;
        }
        const double variance = squares / static_cast<double>(options.walks - 1);
        report.std_error = std::sqrt(variance / static_cast<double>(options.walks));
    }
    return report;
}

ParityResult parity_check(const SimulationReport& report, double exact) {
    if (report.truncations > 0) {
        throw std::invalid_argument("parity check needs a report without truncated walks");
    }
    if (report.std_error == 0.0) {
        const bool equal = approx_equal(report.mean, exact);
        return {equal ? 0.0 : std::copysign(INFINITY, report.mean - exact), equal};
    }
    const double z = (report.mean - exact) / report.std_error;
    return {z, std::abs(z) <= kParityZ};
}

}  // namespace driftwalk
