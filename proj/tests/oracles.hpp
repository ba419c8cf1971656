#pragma once

// Reference computations used only by the tests. None of these call into the
// library's hitting-time or circle-sum routines.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Exact E^x(T_N) for every x by dense Gauss-Jordan elimination of the
/// first-step equations over the rationals.
inline std::vector<Rational> exact_hitting_times(const std::vector<Rational>& omega) {
    const std::size_t n = omega.size() + 1;
    const std::size_t size = n + 1;
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size + 1, Rational(0)));
    m[0][0] = 1;
    m[0][1] = -1;
    m[0][size] = 1;
    for (std::size_t x = 1; x < n; ++x) {
        const Rational& w = omega[x - 1];
        m[x][x - 1] = -(Rational(1) - w);
        m[x][x] = 1;
        m[x][x + 1] = -w;
        m[x][size] = 1;
    }
    m[n][n] = 1;
    m[n][size] = 0;

    for (std::size_t c = 0; c < size; ++c) {
        std::size_t pivot = c;
        while (m[pivot][c] == 0) ++pivot;
        std::swap(m[c], m[pivot]);
        for (std::size_t r = 0; r < size; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j <= size; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = m[i][size] / m[i][i];
    return v;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// n_i^(d) by explicit set membership for each window on Z_m.
inline std::vector<std::size_t> window_counts(std::size_t m,
                                              const std::vector<std::size_t>& positions,
                                              std::size_t d) {
    std::set<std::size_t> sites;
    for (std::size_t p : positions) sites.insert(p % m);  // label sites 0..m-1
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= m; ++i) {
        std::size_t c = 0;
        for (std::size_t t = 0; t < d; ++t) c += sites.count((i + t) % m);
        out.push_back(c);
    }
    return out;
}

/// Literal triple loop for the glued sum, rho indexed 1..m (rho[0] unused).
inline double literal_circle_sum(const std::vector<double>& rho_one_based) {
    const std::size_t m = rho_one_based.size() - 1;
    double total = 0.0;
    for (std::size_t d = 1; d <= m; ++d) {
        for (std::size_t j = 1; j <= m; ++j) {
            double prod = 1.0;
            for (std::size_t t = 0; t < d; ++t) prod *= rho_one_based[(j - 1 + t) % m + 1];
            total += prod;
        }
    }
    return total;
}

/// Every k-subset of {1..m}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i)
            if (mask[i]) s.push_back(i + 1);
        out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

/// omega(i) drawn from (1/2, 1].
inline std::vector<double> random_omega(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(n - 1);
    for (auto& x : w) x = 1.0 - 0.5 * u(gen);
    return w;
}

}  // namespace oracle
