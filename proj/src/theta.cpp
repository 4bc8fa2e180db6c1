#include "interlink/theta.hpp"

#include <cmath>
#include <string>

#include "interlink/agm.hpp"
#include "interlink/elliptic.hpp"
#include "interlink/errors.hpp"

namespace interlink
{

namespace
{

std::size_t isqrt(std::size_t n)
{
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

// Walks every point of the cube [-bound, bound]^k like an odometer.
std::size_t count_tuples(unsigned k, std::size_t n, std::size_t bound)
{
    const long b = static_cast<long>(bound);
    std::vector<long> x(k, -b);
    std::size_t total = 0;
    for (;;) {
        std::size_t norm = 0;
        for (const long xi : x) {
            norm += static_cast<std::size_t>(xi * xi);
        }
        if (norm == n) {
            ++total;
        }
        std::size_t i = 0;
        while (i < k && x[i] == b) {
            x[i] = -b;
            ++i;
        }
        if (i == k) {
            return total;
        }
        ++x[i];
    }
}

} // namespace

Nome::Nome(double q, double tail_tol) : q_(q), tail_tol_(tail_tol)
{
    if (!std::isfinite(q) || q < 0.0 || q >= 1.0) {
        throw RangeError("nome must lie in [0, 1), got " + std::to_string(q));
    }
    if (!(tail_tol > 0.0) || !std::isfinite(tail_tol)) {
        throw ArgumentError("tail tolerance must be positive");
    }
}

std::size_t theta_truncation_index(const Nome& nome)
{
    const double q = nome.q();
    std::size_t n = 0;
    while (std::pow(q, static_cast<double>(n * n)) / (1.0 - q) >= nome.tail_tol()) {
        ++n;
    }
    return n;
}

ThetaTriple theta_sums(double q, std::size_t terms)
{
    // Accumulate from the smallest terms upwards.
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
    for (std::size_t n = terms; n-- > 0;) {
        const double half = static_cast<double>(n) + 0.5;
        s2 += std::pow(q, half * half);
        if (n >= 1) {
            const double p = std::pow(q, static_cast<double>(n * n));
            s3 += p;
            s4 += n % 2 == 0 ? p : -p;
        }
    }
    return ThetaTriple{2.0 * s2, 1.0 + 2.0 * s3, 1.0 + 2.0 * s4, terms};
}

ThetaTriple theta_constants(const Nome& nome)
{
    return theta_sums(nome.q(), theta_truncation_index(nome));
}

double jacobi_quartic_residual(const ThetaTriple& t)
{
    const double t2 = t.theta2 * t.theta2;
    const double t3 = t.theta3 * t.theta3;
    const double t4 = t.theta4 * t.theta4;
    const double rhs = t3 * t3;
    return std::abs(t2 * t2 + t4 * t4 - rhs) / rhs;
}

SumOfSquaresTable sum_of_squares_series(unsigned k, std::size_t n_max)
{
    if (k == 0 || k > kSumOfSquaresMaxK) {
        throw ArgumentError("number of squares must lie in [1, 8], got " + std::to_string(k));
    }
    if (n_max > kSumOfSquaresMaxN) {
        throw ResourceLimitError("sum-of-squares table is limited to n_max <= " + std::to_string(kSumOfSquaresMaxN));
    }
    // theta_3 truncated: 1 + 2 q^{m^2} for 1 <= m <= sqrt(n_max). Sparse, so
    // multiplying by it costs O(n_max sqrt(n_max)) per power.
    const std::size_t root = isqrt(n_max);
    std::vector<BigCount> power(n_max + 1);
    power[0] = 1;
    for (unsigned step = 0; step < k; ++step) {
        std::vector<BigCount> next(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (sgn(power[n]) == 0) {
                continue;
            }
            next[n] += power[n];
            for (std::size_t m = 1; m <= root && n + m * m <= n_max; ++m) {
                next[n + m * m] += 2 * power[n];
            }
        }
        power = std::move(next);
    }
    return SumOfSquaresTable{k, n_max, std::move(power)};
}

BigCount sum_of_squares_bruteforce(unsigned k, std::size_t n)
{
    if (k == 0 || k > kBruteForceMaxK) {
        throw ArgumentError("brute-force count needs 1 <= k <= 4, got " + std::to_string(k));
    }
    if (n > kBruteForceMaxN) {
        throw ResourceLimitError("brute-force count is limited to n <= " + std::to_string(kBruteForceMaxN));
    }
    return BigCount(static_cast<unsigned long>(count_tuples(k, n, isqrt(n))));
}

ThetaIdentityResiduals verify_theta_identities(const Nome& nome)
{
    const double q = nome.q();
    if (!(q > 0.0 && q <= kIdentityNomeLimit)) {
        throw RangeError("theta identities are checked for q in (0, 0.7], got " + std::to_string(q));
    }
    const ThetaTriple at_q = theta_constants(nome);
    const ThetaTriple at_q2 = theta_constants(Nome(q * q, nome.tail_tol()));

    const double t2sq = at_q.theta2 * at_q.theta2;
    const double t3sq = at_q.theta3 * at_q.theta3;
    const double t4sq = at_q.theta4 * at_q.theta4;

    ThetaIdentityResiduals r;
    r.landen = std::abs(0.5 * (t3sq + t4sq) - at_q2.theta3 * at_q2.theta3);
    r.geometric_mean = std::abs(std::sqrt(t3sq * t4sq) - at_q2.theta4 * at_q2.theta4);
    r.agm_normalization = std::abs(agm(t3sq, t4sq).limit - 1.0);
    // k = theta2^2/theta3^2 approaches 1 quickly; 1 - k = k'^2/(1 + k) with k' = theta4^2/theta3^2 avoids cancellation.
    const double one_minus_k = t4sq * t4sq / (t3sq * (t3sq + t2sq));
    const double one_plus_k = 1.0 + t2sq / t3sq;
    r.k_bridge = std::abs(kHalfPi / agm(one_plus_k, one_minus_k).limit - kHalfPi * t3sq);
    return r;
}

} // namespace interlink
