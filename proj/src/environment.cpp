#include "driftwalk/environment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "driftwalk/errors.hpp"

namespace driftwalk {

Environment::Environment(std::size_t n, std::vector<double> omega)
    : n_(n), omega_(std::move(omega)) {
    if (n_ == 0) throw ValidationError("site count n must be at least 1", "n");
    if (omega_.size() != n_ - 1) {
        throw ValidationError("omega must hold exactly n-1 = " + std::to_string(n_ - 1) +
                                  " probabilities, got " + std::to_string(omega_.size()),
                              "omega");
    }
    for (std::size_t i = 0; i < omega_.size(); ++i) {
        const double w = omega_[i];
        if (!(w > 0.0 && w <= 1.0)) {
            throw ValidationError("omega(" + std::to_string(i + 1) + ") = " + std::to_string(w) +
                                      " is outside (0, 1]",
                                  "omega");
        }
    }
}

Environment Environment::uniform(std::size_t n, double w) {
    return Environment(n, std::vector<double>(n == 0 ? 0 : n - 1, w));
}

double Environment::omega(std::size_t site) const {
    if (site < 1 || site >= n_) {
        throw ValidationError("site " + std::to_string(site) + " is not interior to [1, " +
                                  std::to_string(n_ - 1) + "]",
                              "site");
    }
    return omega_[site - 1];
}

void DriftParams::validate() const {
    if (!(q > 0.5)) throw ValidationError("weak drift q must exceed 1/2", "q");
    if (!(p > q)) throw ValidationError("strong drift p must exceed q", "p");
    if (!(p <= 1.0)) throw ValidationError("strong drift p must not exceed 1", "p");
}

DriftPlacement::DriftPlacement(std::size_t n, std::vector<std::size_t> positions,
                               DriftParams params)
    : n_(n), positions_(std::move(positions)), params_(params) {
    params_.validate();
    if (n_ == 0) throw ValidationError("site count n must be at least 1", "n");
    std::sort(positions_.begin(), positions_.end());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        const std::size_t s = positions_[i];
        if (s < 1 || s >= n_) {
            throw ValidationError("drift position " + std::to_string(s) + " is outside [1, " +
                                      std::to_string(n_ - 1) + "]",
                                  "positions");
        }
        if (i > 0 && positions_[i - 1] == s) {
            throw ValidationError("duplicate drift position " + std::to_string(s), "positions");
        }
    }
}

Environment make_environment(const DriftPlacement& placement) {
    std::vector<double> omega(placement.n() - 1, placement.params().q);
    for (std::size_t s : placement.positions()) omega[s - 1] = placement.params().p;
    return Environment(placement.n(), std::move(omega));
}

std::vector<double> rho_vector(const Environment& env) {
    std::vector<double> rho;
    rho.reserve(env.n() - 1);
    for (double w : env.probabilities()) rho.push_back((1.0 - w) / w);
    return rho;
}

namespace {

double formula_prefix(const std::vector<double>& rho, std::size_t n, std::size_t x) {
    // prefix[i] = sum_{j=1}^{i} prod_{k=j}^{i} rho_k
    double prefix = 0.0;
    double tail = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        prefix = rho[i - 1] * (prefix + 1.0);
        if (i >= x) tail += prefix;
    }
    return static_cast<double>(n - x) + 2.0 * tail;
}

double formula_literal(const std::vector<double>& rho, std::size_t n, std::size_t x) {
    double total = 0.0;
    for (std::size_t i = std::max<std::size_t>(x, 1); i < n; ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
            double prod = 1.0;
            for (std::size_t k = j; k <= i; ++k) prod *= rho[k - 1];
            total += prod;
        }
    }
    return static_cast<double>(n - x) + 2.0 * total;
}

}  // namespace

double hitting_time_formula(const Environment& env, std::size_t x, FormulaEvaluation mode) {
    if (x > env.n()) {
        throw std::domain_error("start site " + std::to_string(x) + " is outside [0, " +
                                std::to_string(env.n()) + "]");
    }
    const auto rho = rho_vector(env);
    if (mode == FormulaEvaluation::literal_triple_loop) {
        if (env.n() > kLiteralFormulaMaxSites) {
            throw std::domain_error("literal triple loop is limited to N <= 64");
        }
        return formula_literal(rho, env.n(), x);
    }
    return formula_prefix(rho, env.n(), x);
}

HittingTimeProfile hitting_time_formula_profile(const Environment& env) {
    const std::size_t n = env.n();
    const auto rho = rho_vector(env);

    // Suffix sums of the prefix products give every start site in O(N).
    std::vector<double> prefix(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) prefix[i] = rho[i - 1] * (prefix[i - 1] + 1.0);

    HittingTimeProfile out;
    out.v.assign(n + 1, 0.0);
    double tail = 0.0;
    for (std::size_t x = n; x-- > 0;) {
        if (x >= 1) tail += prefix[x];
        out.v[x] = static_cast<double>(n - x) + 2.0 * tail;
    }
    out.a.resize(n);
    for (std::size_t x = 1; x <= n; ++x) out.a[x - 1] = out.v[x] - out.v[x - 1];
    return out;
}

HittingTimeProfile hitting_time_recurrence(const Environment& env) {
    const std::size_t n = env.n();
    HittingTimeProfile out;
    out.a.resize(n);
    out.a[0] = -1.0;
    for (std::size_t x = 1; x < n; ++x) {
        const double w = env.probabilities()[x - 1];
        const double rho = (1.0 - w) / w;
        out.a[x] = rho * out.a[x - 1] - rho - 1.0;
    }
    out.v.assign(n + 1, 0.0);
    for (std::size_t x = n; x-- > 0;) out.v[x] = out.v[x + 1] - out.a[x];
    return out;
}

HittingTimeProfile hitting_time_linear_solve(const Environment& env) {
    const std::size_t n = env.n();
    const std::size_t size = n + 1;
    std::vector<double> lower(size, 0.0), diag(size, 1.0), upper(size, 0.0), rhs(size, 1.0);

    upper[0] = -1.0;
    for (std::size_t x = 1; x < n; ++x) {
        const double w = env.probabilities()[x - 1];
        lower[x] = -(1.0 - w);
        upper[x] = -w;
    }
    rhs[n] = 0.0;

    // Forward elimination.
    for (std::size_t x = 1; x < size; ++x) {
        const double factor = lower[x] / diag[x - 1];
        diag[x] -= factor * upper[x - 1];
        rhs[x] -= factor * rhs[x - 1];
    }

    HittingTimeProfile out;
    out.v.assign(size, 0.0);
    out.v[n] = rhs[n] / diag[n];
    for (std::size_t x = n; x-- > 0;) out.v[x] = (rhs[x] - upper[x] * out.v[x + 1]) / diag[x];

    out.a.resize(n);
    for (std::size_t x = 1; x <= n; ++x) out.a[x - 1] = out.v[x] - out.v[x - 1];
    return out;
}

Environment reflect(const Environment& env) {
    const auto probs = env.probabilities();
    return Environment(env.n(), std::vector<double>(probs.rbegin(), probs.rend()));
}

}  // namespace driftwalk
