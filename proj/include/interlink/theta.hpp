#pragma once

#include <cstddef>
#include <vector>

#include "interlink/power_series.hpp"

namespace interlink
{

inline constexpr double kDefaultTailTolerance = 1e-17;
inline constexpr unsigned kSumOfSquaresMaxK = 8;
inline constexpr std::size_t kSumOfSquaresMaxN = 10000;
inline constexpr unsigned kBruteForceMaxK = 4;
inline constexpr std::size_t kBruteForceMaxN = 500;
// Identity checks need q^2 and the AGM to stay well conditioned.
inline constexpr double kIdentityNomeLimit = 0.7;

// Real nome q in [0, 1) together with the tail tolerance used to truncate theta sums.
class Nome
{
public:
    explicit Nome(double q, double tail_tol = kDefaultTailTolerance);
    double q() const { return q_; }
    double tail_tol() const { return tail_tol_; }

private:
    double q_;
    double tail_tol_;
};

struct ThetaTriple
{
    double theta2 = 0.0;
    double theta3 = 1.0;
    double theta4 = 1.0;
    std::size_t terms_used = 1;
};

// Smallest N with q^{N^2} / (1 - q) < tail_tol; indices n >= N are dropped.
std::size_t theta_truncation_index(const Nome& nome);

/// theta_2 = 2 sum_{n>=0} q^{(n+1/2)^2}, theta_3 = 1 + 2 sum_{n>=1} q^{n^2},
/// theta_4 = 1 + 2 sum_{n>=1} (-1)^n q^{n^2}, each truncated at theta_truncation_index.
ThetaTriple theta_constants(const Nome& nome);

// The same sums with an explicit index cutoff (n < terms).
ThetaTriple theta_sums(double q, std::size_t terms);

// |theta2^4 + theta4^4 - theta3^4| / theta3^4.
double jacobi_quartic_residual(const ThetaTriple& t);

struct SumOfSquaresTable
{
    unsigned k = 0;
    std::size_t n_max = 0;
    // r[n] = #{x in Z^k : |x|^2 = n}.
    std::vector<BigCount> r;
};

/// Coefficients of theta_3(q)^k through q^{n_max} by exact truncated polynomial powering.
SumOfSquaresTable sum_of_squares_series(unsigned k, std::size_t n_max);

/// Counts integer k-tuples with x_1^2 + ... + x_k^2 = n by walking the cube [-sqrt n, sqrt n]^k.
BigCount sum_of_squares_bruteforce(unsigned k, std::size_t n);

struct ThetaIdentityResiduals
{
    // |(theta3^2(q) + theta4^2(q))/2 - theta3^2(q^2)|
    double landen = 0.0;
    // |sqrt(theta3^2(q) theta4^2(q)) - theta4^2(q^2)|
    double geometric_mean = 0.0;
    // |M(theta3^2, theta4^2) - 1|
    double agm_normalization = 0.0;
    // |K(theta2^2/theta3^2) - (pi/2) theta3^2|
    double k_bridge = 0.0;
};

/// Evaluates the four residuals for q in (0, kIdentityNomeLimit]; other q is a RangeError.
ThetaIdentityResiduals verify_theta_identities(const Nome& nome);

} // namespace interlink
