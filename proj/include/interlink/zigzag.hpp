#pragma once

#include <cstddef>
#include <vector>

#include "interlink/power_series.hpp"

namespace interlink
{

// Hard cap for exhaustive enumeration; 12! permutations is the most we ever walk.
inline constexpr std::size_t kEnumerationLimit = 12;
// Cap used by the default verification profile.
inline constexpr std::size_t kDefaultEnumerationLimit = 10;

inline constexpr std::size_t kTangentLimit = 199;
inline constexpr std::size_t kZigzagLimit = 500;
inline constexpr std::size_t kTangentOdeOrderLimit = 60;

// Alternating-permutation counts T_0..T_{n_max} for both parities.
// Odd entries are tangent numbers, even entries secant numbers.
struct ZigzagTable
{
    std::size_t n_max = 0;
    std::vector<BigCount> counts;

    const BigCount& operator[](std::size_t n) const { return counts.at(n); }
};

/// Counts permutations p of {1..n} with p1 < p2 > p3 < p4 ... by walking them.
/// n = 0 counts the empty permutation. n > kEnumerationLimit is a ResourceLimitError.
BigCount enumerate_alternating(std::size_t n);

/// T_1, T_3, ..., T_{n_max} from the convolution recurrence
///   T_n = sum_{k odd, 1 <= k <= n-2} C(n-1, k) T_k T_{n-1-k},  T_1 = 1.
/// n_max must be odd and at most kTangentLimit.
std::vector<BigCount> tangent_numbers(std::size_t n_max);

/// All T_n, 0 <= n <= n_max, from the Seidel boustrophedon triangle.
ZigzagTable zigzag_numbers(std::size_t n_max);

/// T(s) = sum_{n odd} T_n s^n / n! truncated at `order`.
TruncatedPowerSeries tangent_series(std::size_t order);

/// Residual of T'(s) - 1 - T(s)^2 through `order` (even, 2..kTangentOdeOrderLimit).
/// Every coefficient is exactly zero when the tangent numbers are right.
ResidualSeries verify_tangent_ode(std::size_t order);

} // namespace interlink
