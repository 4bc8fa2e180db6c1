#pragma once

#include <cstddef>
#include <vector>

#include "interlink/power_series.hpp"

namespace interlink
{

inline constexpr double kDefaultAgmTolerance = 1e-15;
inline constexpr std::size_t kGaussSeriesLimit = 200;
inline constexpr std::size_t kFunctionalEquationLimit = 60;
inline constexpr std::size_t kAgmOdeLimit = 100;

struct AgmStep
{
    double a;
    double b;
};

struct AgmResult
{
    double limit = 0.0;
    // Number of (a_n, b_n) pairs visited, i.e. trace.size().
    std::size_t iterations = 0;
    // trace[0] is the input pair ordered so that a >= b.
    std::vector<AgmStep> trace;
};

/**
 * Arithmetic-geometric mean M(a, b).
 *
 * The pair is ordered so a >= b, then a_{n+1} = (a_n + b_n)/2 and
 * b_{n+1} = sqrt(a_n b_n) until |a_n - b_n| <= rel_tol * max(a_n, b_n);
 * the midpoint of the final pair is returned. b = 0 yields 0 immediately.
 * Non-finite or negative inputs, a zero larger argument, or rel_tol
 * outside (0, 1) are ArgumentErrors.
 */
AgmResult agm(double a, double b, double rel_tol = kDefaultAgmTolerance);

// Coefficients A_0..A_K of 1/M(1+x, 1-x) = sum A_k x^{2k}, held as a series in u = x^2.
class GaussSeries
{
public:
    explicit GaussSeries(TruncatedPowerSeries coefficients);

    std::size_t k_max() const { return coeffs_.order(); }
    const BigRational& coefficient(std::size_t k) const { return coeffs_[k]; }
    const TruncatedPowerSeries& in_u() const { return coeffs_; }
    // The same coefficients as a series in x, of order 2K.
    TruncatedPowerSeries in_x() const;
    // sum_{k <= K} A_k x^{2k} in double precision.
    double partial_sum(double x) const;

    // Replaces one coefficient; used by fault-injection checks.
    void set_coefficient(std::size_t k, BigRational value) { coeffs_.set(k, std::move(value)); }

private:
    TruncatedPowerSeries coeffs_;
};

// A_k = ((1*3*...*(2k-1)) / (2*4*...*(2k)))^2 = (C(2k,k) / 4^k)^2.
BigRational gauss_coefficient(std::size_t k);

GaussSeries gauss_series(std::size_t k_max);

/// Residual of sum A_k (2t/(1+t^2))^{2k} - (1+t^2) sum A_k t^{4k}, expanded to order 4K in t.
/// Certified through order 2K; higher coefficients see the missing A_{K+1}, ... terms.
ResidualSeries verify_functional_equation(std::size_t k_max);
ResidualSeries verify_functional_equation(const GaussSeries& series);

/// Residual of (x^3 - x) y'' + (3x^2 - 1) y' + x y with y = sum_{k <= K} A_k x^{2k},
/// truncated and certified through order max(2K - 1, 0).
ResidualSeries verify_agm_ode(std::size_t k_max);
ResidualSeries verify_agm_ode(const GaussSeries& series);

} // namespace interlink
