#include "driftwalk/interval_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "driftwalk/errors.hpp"

namespace driftwalk {

namespace {

void check_odds(double alpha, double beta) {
    if (!(beta >= 0.0 && beta < alpha && alpha < 1.0)) {
        throw ValidationError("odds must satisfy 0 <= beta < alpha < 1", "alpha");
    }
}

void check_window(std::size_t m, std::size_t d) {
    if (d < 1 || d > m) {
        throw std::domain_error("window length " + std::to_string(d) + " is outside [1, " +
                                std::to_string(m) + "]");
    }
}

// occupied[s] for canonical sites s = 1..m; index 0 unused.
std::vector<unsigned char> occupancy(std::size_t m, std::span<const std::size_t> positions) {
    std::vector<unsigned char> occupied(m + 1, 0);
    for (std::size_t pos : positions) {
        const std::size_t s = circle_site(m, pos);
        if (occupied[s]) {
            throw ValidationError("two drifts share circle site " + std::to_string(s),
                                  "positions");
        }
        occupied[s] = 1;
    }
    return occupied;
}

std::size_t truncation_length(std::size_t m, double alpha, const SumOptions& options) {
    if (!options.truncate) return m;
    double power = 1.0;
    for (std::size_t d = 1; d <= m; ++d) {
        power *= alpha;
        if (static_cast<double>(m) * power < kSigmaTruncation) return d - 1;
    }
    return m;
}

double max_rho(const Environment& env) {
    double out = 0.0;
    for (double r : rho_vector(env)) out = std::max(out, r);
    return out;
}

}  // namespace

double interval_sum(const Environment& env) {
    double prefix = 0.0;
    double total = 0.0;
    for (double w : env.probabilities()) {
        prefix = (1.0 - w) / w * (prefix + 1.0);
        total += prefix;
    }
    return total;
}

std::size_t circle_site(std::size_t m, std::size_t position) {
    if (m == 0) throw std::domain_error("circle size must be at least 1");
    return (position + m - 1) % m + 1;
}

IntervalCountProfile drift_counts(std::size_t m, std::span<const std::size_t> positions,
                                  std::size_t d) {
    if (m == 0) throw std::domain_error("circle size must be at least 1");
    check_window(m, d);
    const auto occupied = occupancy(m, positions);

    IntervalCountProfile out{m, d, positions.size(), std::vector<std::size_t>(m, 0)};
    std::size_t count = 0;
    for (std::size_t t = 1; t <= d; ++t) count += occupied[t];
    out.counts[0] = count;
    for (std::size_t i = 1; i < m; ++i) {
        // Window i+1 drops site i and gains site i+d (mod m).
        count -= occupied[i];
        count += occupied[circle_site(m, i + d)];
        out.counts[i] = count;
    }
    return out;
}

IntervalCountProfile drift_counts(const DriftPlacement& placement, std::size_t d) {
    return drift_counts(placement.circle_size(), placement.positions(), d);
}

double sigma_d(const IntervalCountProfile& profile, double alpha, double beta) {
    check_odds(alpha, beta);
    const double ratio = beta / alpha;
    double total = 0.0;
    for (std::size_t n : profile.counts) total += std::pow(ratio, static_cast<double>(n));
    return total * std::pow(alpha, static_cast<double>(profile.d));
}

double sigma_d(const DriftPlacement& placement, std::size_t d) {
    return sigma_d(drift_counts(placement, d), placement.params().alpha(),
                   placement.params().beta());
}

std::vector<double> circle_sigmas(const DriftPlacement& placement, SumOptions options) {
    const std::size_t m = placement.circle_size();
    if (m == 0) return {};
    const double alpha = placement.params().alpha();
    const double beta = placement.params().beta();
    check_odds(alpha, beta);

    const std::size_t k = placement.k();
    std::vector<double> ratio_pow(k + 1, 1.0);
    for (std::size_t n = 1; n <= k; ++n) ratio_pow[n] = ratio_pow[n - 1] * (beta / alpha);

    const auto occupied = occupancy(m, placement.positions());
    const std::size_t d_max = truncation_length(m, alpha, options);

    // counts[i-1] grows by one site per length step: window i at length d+1
    // adds site i+d.
    std::vector<std::size_t> counts(m, 0);
    std::vector<double> sigma;
    sigma.reserve(d_max);
    double alpha_pow = 1.0;
    for (std::size_t d = 1; d <= d_max; ++d) {
        alpha_pow *= alpha;
        double total = 0.0;
        for (std::size_t i = 1; i <= m; ++i) {
            counts[i - 1] += occupied[circle_site(m, i + d - 1)];
            total += ratio_pow[counts[i - 1]];
        }
        sigma.push_back(total * alpha_pow);
    }
    return sigma;
}

std::vector<double> circle_sigmas(const Environment& env, SumOptions options) {
    const std::size_t m = env.n() - 1;
    if (m == 0) return {};
    const auto rho = rho_vector(env);
    const std::size_t d_max = truncation_length(m, max_rho(env), options);

    std::vector<double> sigma(d_max, 0.0);
    for (std::size_t j = 1; j <= m; ++j) {
        double prod = 1.0;
        for (std::size_t d = 1; d <= d_max; ++d) {
            prod *= rho[circle_site(m, j + d - 1) - 1];
            sigma[d - 1] += prod;
        }
    }
    return sigma;
}

double circle_sum(const DriftPlacement& placement, SumOptions options) {
    const auto sigma = circle_sigmas(placement, options);
    return std::accumulate(sigma.begin(), sigma.end(), 0.0);
}

double circle_sum(const Environment& env, SumOptions options) {
    const auto sigma = circle_sigmas(env, options);
    return std::accumulate(sigma.begin(), sigma.end(), 0.0);
}

double wrap_sum(const Environment& env) {
    const std::size_t n = env.n();
    if (n < 2) return 0.0;
    const std::size_t m = n - 1;
    const auto rho = rho_vector(env);
    double total = 0.0;
    for (std::size_t j = 2; j <= m; ++j) {
        // Windows from j of length d wrap once d >= N - j + 1.
        double prod = 1.0;
        for (std::size_t d = 1; d <= m; ++d) {
            prod *= rho[circle_site(m, j + d - 1) - 1];
            if (d >= n - j + 1) total += prod;
        }
    }
    return total;
}

double bound_constant(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::domain_error("bound constant needs 0 <= alpha < 1");
    }
    return alpha / ((1.0 - alpha) * (1.0 - alpha));
}

CircleSumReport circle_sum_report(const DriftPlacement& placement, SumOptions options) {
    CircleSumReport out;
    out.s = interval_sum(make_environment(placement));
    out.sigma = circle_sigmas(placement, options);
    out.s_tilde = std::accumulate(out.sigma.begin(), out.sigma.end(), 0.0);
    out.bound = bound_constant(placement.params().alpha());
    return out;
}

CircleSumReport circle_sum_report(const Environment& env, SumOptions options) {
    const double alpha = max_rho(env);
    if (!(alpha < 1.0)) {
        throw ValidationError("circle bound needs every omega(i) > 1/2", "omega");
    }
    CircleSumReport out;
    out.s = interval_sum(env);
    out.sigma = circle_sigmas(env, options);
    out.s_tilde = std::accumulate(out.sigma.begin(), out.sigma.end(), 0.0);
    out.bound = bound_constant(alpha);
    return out;
}

bool is_almost_constant(const IntervalCountProfile& profile) {
    if (profile.counts.empty()) return true;
    const auto [lo, hi] = std::minmax_element(profile.counts.begin(), profile.counts.end());
    return *hi - *lo <= 1;
}

}  // namespace driftwalk
