#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace driftwalk {

inline constexpr double kRelTol = 1e-10;
inline constexpr double kAbsTol = 1e-12;

/// Largest supported site count for the O(N) routines.
inline constexpr std::size_t kMaxSites = 100000;

inline bool approx_equal(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
    return std::abs(a - b) <= std::max(abs, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace driftwalk
