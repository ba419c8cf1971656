#include "driftwalk/limit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "driftwalk/errors.hpp"
#include "driftwalk/numeric.hpp"
#include "driftwalk/placement.hpp"

namespace driftwalk {

LimitParams::LimitParams(unsigned a, DriftParams drifts)
    : LimitParams(a, (drifts.validate(), drifts.alpha()), drifts.beta()) {}

LimitParams::LimitParams(unsigned a, double alpha, double beta)
    : a_(a), alpha_(alpha), beta_(beta) {
    if (a_ < 1) throw ValidationError("gap a must be at least 1", "a");
    if (!(beta_ >= 0.0 && beta_ < alpha_ && alpha_ < 1.0)) {
        throw ValidationError("odds must satisfy 0 <= beta < alpha < 1", "alpha");
    }
    if (!(tail_ratio() < 1.0)) throw ValidationError("series ratio must be below 1", "beta");
}

LimitParams LimitParams::from_odds(unsigned a, double alpha, double beta) {
    return LimitParams(a, alpha, beta);
}

double LimitParams::tail_ratio() const {
    return beta_ * std::pow(alpha_, static_cast<double>(a_ - 1));
}

namespace {

// sum_{r=0}^{a-1} alpha^r
double block_sum(const LimitParams& params) {
    double total = 0.0;
    double power = 1.0;
    for (unsigned r = 0; r < params.a(); ++r) {
        total += power;
        power *= params.alpha();
    }
    return total;
}

}  // namespace

double s_zero(const LimitParams& params) {
    const unsigned a = params.a();
    double total = 0.0;
    double power = 1.0;
    for (unsigned i = 1; i < a; ++i) {
        power *= params.alpha();
        total += static_cast<double>(a - i) * power;
    }
    return total;
}

double s_n(const LimitParams& params, std::size_t n) {
    if (n < 1) throw std::domain_error("s_n needs n >= 1");
    const double block = block_sum(params);
    return std::pow(params.beta(), static_cast<double>(n)) *
           std::pow(params.alpha(), static_cast<double>((params.a() - 1) * (n - 1))) * block *
           block;
}

double s_tail(const LimitParams& params, std::size_t from) {
    return s_n(params, from) / (1.0 - params.tail_ratio());
}

double series_inner_sum(const LimitParams& params) {
    return s_zero(params) + s_tail(params, 1);
}

double speed_limit_series(const LimitParams& params) {
    return 1.0 + 2.0 / static_cast<double>(params.a()) * series_inner_sum(params);
}

double printed_inner_ratio(const LimitParams& params) {
    const double a = static_cast<double>(params.a());
    const double al = params.alpha();
    const double be = params.beta();
    const double al_a = std::pow(al, a);

    const double numerator = std::pow(al, a + 2.0) - a * al * al * al + (a - 1.0) * al * al +
                             ((a * al * al - (a + 1.0) * al) * al_a + al) * be;
    const double denominator =
        (al * al - 2.0 * al + 1.0) * al_a * be - al * al * al + 2.0 * al * al - al;
    if (std::abs(denominator) < kPrintedSingularity) {
        throw SingularityError("closed-form denominator vanishes");
    }
    return numerator / denominator;
}

double speed_limit_printed(const LimitParams& params) {
    return 1.0 + 2.0 / static_cast<double>(params.a()) * printed_inner_ratio(params);
}

double finite_k_speed(unsigned a, std::size_t k, DriftParams drifts) {
    drifts.validate();
    if (a < 1) throw ValidationError("gap a must be at least 1", "a");
    if (k > kMaxSites / a) {
        throw SizeError("N = a k exceeds the supported " + std::to_string(kMaxSites) + " sites");
    }
    const std::size_t n = static_cast<std::size_t>(a) * k;
    if (n < 2) throw std::domain_error("finite-k speed needs a k >= 2");
    const auto placement = equally_spaced(n, std::min(k, n - 1), drifts);
    const double time = hitting_time_recurrence(make_environment(placement)).from_origin();
    return time / static_cast<double>(n);
}

}  // namespace driftwalk
