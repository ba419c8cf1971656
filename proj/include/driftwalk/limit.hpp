#pragma once

#include <cstddef>

#include "driftwalk/environment.hpp"

namespace driftwalk {

/// Gap a (sites per strong drift) together with the drift odds.
class LimitParams {
public:
    LimitParams(unsigned a, DriftParams drifts);

    /// Builds directly from the odds alpha = (1-q)/q and beta = (1-p)/p so
    /// that exact dyadic odds stay exact.
    static LimitParams from_odds(unsigned a, double alpha, double beta);

    unsigned a() const noexcept { return a_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    DriftParams drifts() const noexcept { return {1.0 / (1.0 + alpha_), 1.0 / (1.0 + beta_)}; }

    /// Ratio s_{n+1} / s_n = beta alpha^{a-1}.
    double tail_ratio() const;

private:
    LimitParams(unsigned a, double alpha, double beta);

    unsigned a_;
    double alpha_;
    double beta_;
};

/// Contribution of a window with no strong drift:
/// s_0 = sum_{i=1}^{a-1} (a - i) alpha^i.
double s_zero(const LimitParams& params);

/// Contribution of windows holding n >= 1 strong drifts:
/// s_n = beta^n alpha^{(a-1)(n-1)} (sum_{r<a} alpha^r)^2.
double s_n(const LimitParams& params, std::size_t n);

/// sum_{j >= from} s_j in closed form, from >= 1.
double s_tail(const LimitParams& params, std::size_t from);

/// s_0 + sum_{n>=1} s_n.
double series_inner_sum(const LimitParams& params);

/// lim_{k -> inf} E^0(T_{ak}) / (ak) = 1 + (2/a) (s_0 + sum_{n>=1} s_n).
double speed_limit_series(const LimitParams& params);

/// The closed rational expression in alpha, beta and a, evaluated verbatim:
///   [alpha^{a+2} - a alpha^3 + (a-1) alpha^2 + ((a alpha^2 - (a+1) alpha) alpha^a + alpha) beta]
///   / [(alpha^2 - 2 alpha + 1) alpha^a beta - alpha^3 + 2 alpha^2 - alpha].
/// Its sign is opposite to series_inner_sum at every parameter we have
/// checked, so the canonical limit is speed_limit_series.
/// Throws SingularityError when the denominator is within 1e-14 of zero.
double printed_inner_ratio(const LimitParams& params);

/// 1 + (2/a) printed_inner_ratio(params).
double speed_limit_printed(const LimitParams& params);

inline constexpr double kPrintedSingularity = 1e-14;

/// E^0(T_{ak}) / (ak) for the equally spaced placement with min(k, ak-1)
/// strong drifts (with a = 1 every interior site is strong).
double finite_k_speed(unsigned a, std::size_t k, DriftParams drifts);

}  // namespace driftwalk
