#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace driftwalk {

/// Right-step probabilities for a nearest-neighbour walk on {0, ..., N}.
/// Site 0 reflects (always steps to 1), site N absorbs. omega(i) is stored
/// for the interior sites i = 1..N-1, each in (0, 1].
class Environment {
public:
    Environment(std::size_t n, std::vector<double> omega);

    /// Homogeneous environment with omega(i) = w everywhere.
    static Environment uniform(std::size_t n, double w);

    std::size_t n() const noexcept { return n_; }

    /// omega(site) for site in [1, N-1].
    double omega(std::size_t site) const;

    /// All interior probabilities; element i-1 holds omega(i).
    std::span<const double> probabilities() const noexcept { return omega_; }

    friend bool operator==(const Environment&, const Environment&) = default;

private:
    std::size_t n_;
    std::vector<double> omega_;
};

/// Strong (p) and weak (q) drift probabilities, 1/2 < q < p <= 1.
struct DriftParams {
    double q;
    double p;

    /// Throws ValidationError unless 1/2 < q < p <= 1.
    void validate() const;

    /// Left/right odds at a weak site: (1-q)/q.
    double alpha() const noexcept { return (1.0 - q) / q; }
    /// Left/right odds at a strong site: (1-p)/p.
    double beta() const noexcept { return (1.0 - p) / p; }
};

/// k strong drifts at sorted, distinct sites in [1, N-1]; every other
/// interior site is a weak drift.
class DriftPlacement {
public:
    /// Positions may arrive unsorted; duplicates or sites outside [1, N-1]
    /// are rejected.
    DriftPlacement(std::size_t n, std::vector<std::size_t> positions, DriftParams params);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return positions_.size(); }
    std::span<const std::size_t> positions() const noexcept { return positions_; }
    const DriftParams& params() const noexcept { return params_; }

    /// Circle size N-1 used by the glued construction.
    std::size_t circle_size() const noexcept { return n_ - 1; }

private:
    std::size_t n_;
    std::vector<std::size_t> positions_;
    DriftParams params_;
};

/// Expected hitting times of N from every start site.
struct HittingTimeProfile {
    /// v[x] = E^x(T_N) for x = 0..N.
    std::vector<double> v;
    /// a[x-1] = v[x] - v[x-1] for x = 1..N.
    std::vector<double> a;

    double from_origin() const { return v.front(); }
};

Environment make_environment(const DriftPlacement& placement);

/// rho_i = (1 - omega(i)) / omega(i) for i = 1..N-1.
std::vector<double> rho_vector(const Environment& env);

enum class FormulaEvaluation {
    /// O(N) prefix accumulation P_i = rho_i (P_{i-1} + 1).
    prefix,
    /// Literal triple loop over i, j, k. Testing only; N <= 64.
    literal_triple_loop,
};

inline constexpr std::size_t kLiteralFormulaMaxSites = 64;

/// E^x(T_N) = N - x + 2 sum_{i=x}^{N-1} sum_{j=1}^{i} prod_{k=j}^{i} rho_k.
double hitting_time_formula(const Environment& env, std::size_t x,
                            FormulaEvaluation mode = FormulaEvaluation::prefix);

/// Profile assembled from hitting_time_formula at every start site.
HittingTimeProfile hitting_time_formula_profile(const Environment& env);

/// Increment recurrence a_1 = -1, a_{x+1} = rho_x a_x - rho_x - 1, then
/// v_x = -sum_{i>x} a_i. O(N).
HittingTimeProfile hitting_time_recurrence(const Environment& env);

/// Thomas-algorithm solve of the first-step equations
///   v_0 - v_1 = 1,
///   -(1-omega(x)) v_{x-1} + v_x - omega(x) v_{x+1} = 1   (1 <= x <= N-1),
///   v_N = 0.
HittingTimeProfile hitting_time_linear_solve(const Environment& env);

/// omega'(i) = omega(N - i).
Environment reflect(const Environment& env);

}  // namespace driftwalk
