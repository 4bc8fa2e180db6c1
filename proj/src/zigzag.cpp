#include "interlink/zigzag.hpp"

#include <string>

#include "interlink/errors.hpp"

namespace interlink
{

namespace
{

// Depth-first walk over permutations that respect the up/down pattern so far.
// Position i (0-based) must rise from i-1 when i is odd and fall when i is even.
std::size_t count_completions(std::vector<bool>& used, std::size_t n, std::size_t depth, std::size_t last)
{
    if (depth == n) {
        return 1;
    }
    std::size_t total = 0;
    const bool must_rise = depth % 2 == 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) {
            continue;
        }
        if (depth > 0 && (must_rise ? v < last : v > last)) {
            continue;
        }
        used[v] = true;
        total += count_completions(used, n, depth + 1, v);
        used[v] = false;
    }
    return total;
}

BigCount binomial(std::size_t n, std::size_t k)
{
    BigCount result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

BigCount factorial(std::size_t n)
{
    BigCount result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

} // namespace

BigCount enumerate_alternating(std::size_t n)
{
    if (n > kEnumerationLimit) {
        throw ResourceLimitError("enumeration is limited to n <= " + std::to_string(kEnumerationLimit) + ", got "
                                 + std::to_string(n));
    }
    std::vector<bool> used(n, false);
    return BigCount(static_cast<unsigned long>(count_completions(used, n, 0, 0)));
}

std::vector<BigCount> tangent_numbers(std::size_t n_max)
{
    if (n_max % 2 == 0) {
        throw ArgumentError("tangent numbers need an odd n_max, got " + std::to_string(n_max));
    }
    if (n_max > kTangentLimit) {
        throw ResourceLimitError("tangent numbers are limited to n_max <= " + std::to_string(kTangentLimit));
    }
    // odd[j] holds T_{2j+1}.
    std::vector<BigCount> odd;
    odd.reserve(n_max / 2 + 1);
    odd.emplace_back(1);
    for (std::size_t n = 3; n <= n_max; n += 2) {
        BigCount sum = 0;
        for (std::size_t k = 1; k + 2 <= n; k += 2) {
            sum += binomial(n - 1, k) * odd[k / 2] * odd[(n - 1 - k) / 2];
        }
        odd.push_back(std::move(sum));
    }
    return odd;
}

ZigzagTable zigzag_numbers(std::size_t n_max)
{
    if (n_max > kZigzagLimit) {
        throw ResourceLimitError("zigzag table is limited to n_max <= " + std::to_string(kZigzagLimit));
    }
    ZigzagTable table;
    table.n_max = n_max;
    table.counts.reserve(n_max + 1);
    table.counts.emplace_back(1);

    // Seidel-Entringer triangle: row n has entries E(n,0..n) with
    // E(n,0) = 0 and E(n,k) = E(n,k-1) + E(n-1,n-k); T_n = E(n,n).
    std::vector<BigCount> prev{BigCount(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<BigCount> row(n + 1);
        row[0] = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            row[k] = row[k - 1] + prev[n - k];
        }
        table.counts.push_back(row[n]);
        prev = std::move(row);
    }
    return table;
}

TruncatedPowerSeries tangent_series(std::size_t order)
{
    TruncatedPowerSeries series(order);
    if (order == 0) {
        return series;
    }
    const std::size_t top = order % 2 == 1 ? order : order - 1;
    const auto tangents = tangent_numbers(top);
    for (std::size_t j = 0; j < tangents.size(); ++j) {
        const std::size_t n = 2 * j + 1;
        series.set(n, BigRational(tangents[j], factorial(n)));
    }
    return series;
}

ResidualSeries verify_tangent_ode(std::size_t order)
{
    if (order == 0 || order % 2 == 1) {
        throw ArgumentError("tangent ODE check needs an even positive order, got " + std::to_string(order));
    }
    if (order > kTangentOdeOrderLimit) {
        throw ResourceLimitError("tangent ODE check is limited to order <= " + std::to_string(kTangentOdeOrderLimit));
    }
    // T' at order N needs the s^{N+1} coefficient of T.
    const auto t = tangent_series(order + 1);
    const auto lhs = t.derivative();
    const auto one = TruncatedPowerSeries::monomial(order, 1, 0);
    const auto t_n = t.truncated(order);
    auto residual = lhs - one - t_n * t_n;
    return ResidualSeries{std::move(residual), order};
}

} // namespace interlink
