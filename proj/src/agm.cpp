#include "interlink/agm.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "interlink/errors.hpp"

namespace interlink
{

namespace
{

// Quadratic convergence reaches any double-precision target long before this.
constexpr std::size_t kAgmIterationCap = 64;

} // namespace

AgmResult agm(double a, double b, double rel_tol)
{
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw ArgumentError("agm arguments must be finite");
    }
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw ArgumentError("agm tolerance must lie in (0, 1)");
    }
    if (a < b) {
        std::swap(a, b);
    }
    if (b < 0.0 || a <= 0.0) {
        throw ArgumentError("agm needs a > 0 and b >= 0");
    }

    AgmResult result;
    result.trace.push_back({a, b});
    if (b == 0.0) {
        result.limit = 0.0;
        result.iterations = 1;
        return result;
    }

    for (;;) {
        const auto [an, bn] = result.trace.back();
        if (an - bn <= rel_tol * an) {
            result.limit = 0.5 * (an + bn);
            break;
        }
        const double next_a = 0.5 * (an + bn);
        const double next_b = std::sqrt(an * bn);
        if (next_a == an && next_b == bn) {
            // Floating fixed point: the gap cannot shrink further.
            result.limit = 0.5 * (an + bn);
            break;
        }
        if (result.trace.size() >= kAgmIterationCap) {
            throw ConvergenceError("agm failed to converge in " + std::to_string(kAgmIterationCap) + " iterations");
        }
        // Rounding can leave sqrt a hair above the mean; keep a_n >= b_n.
        result.trace.push_back({std::max(next_a, next_b), std::min(next_a, next_b)});
    }
    result.iterations = result.trace.size();
    return result;
}

GaussSeries::GaussSeries(TruncatedPowerSeries coefficients) : coeffs_(std::move(coefficients)) {}

TruncatedPowerSeries GaussSeries::in_x() const
{
    if (k_max() == 0) {
        return coeffs_;
    }
    return coeffs_.substitute_monomial(1, 2);
}

double GaussSeries::partial_sum(double x) const
{
    const double u = x * x;
    double sum = 0.0;
    for (std::size_t k = k_max() + 1; k-- > 0;) {
        sum = sum * u + coeffs_[k].get_d();
    }
    return sum;
}

BigRational gauss_coefficient(std::size_t k)
{
    BigCount central;
    mpz_bin_uiui(central.get_mpz_t(), 2 * k, k);
    BigCount four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    BigRational ratio(central, four_k);
    ratio.canonicalize();
    return ratio * ratio;
}

GaussSeries gauss_series(std::size_t k_max)
{
    if (k_max > kGaussSeriesLimit) {
        throw ResourceLimitError("Gauss series is limited to k_max <= " + std::to_string(kGaussSeriesLimit));
    }
    std::vector<BigRational> coeffs;
    coeffs.reserve(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        coeffs.push_back(gauss_coefficient(k));
    }
    return GaussSeries(TruncatedPowerSeries(std::move(coeffs)));
}

ResidualSeries verify_functional_equation(std::size_t k_max)
{
    if (k_max > kFunctionalEquationLimit) {
        throw ResourceLimitError("functional-equation check is limited to k_max <= "
                                 + std::to_string(kFunctionalEquationLimit));
    }
    return verify_functional_equation(gauss_series(k_max));
}

ResidualSeries verify_functional_equation(const GaussSeries& series)
{
    const std::size_t k_max = series.k_max();
    const std::size_t order = 4 * k_max;

    // (2t / (1 + t^2))^2 = 4t^2 (1 + t^2)^{-2}; raise it to the k-th power term by term.
    const auto one_plus_t2 = TruncatedPowerSeries::monomial(order, 1, 0) + TruncatedPowerSeries::monomial(order, 1, 2);
    const auto x_squared = TruncatedPowerSeries::monomial(order, 4, 2) * one_plus_t2.pow(2).reciprocal();

    TruncatedPowerSeries lhs(order);
    TruncatedPowerSeries rhs(order);
    auto power = TruncatedPowerSeries::monomial(order, 1, 0);
    for (std::size_t k = 0; k <= k_max; ++k) {
        lhs += series.coefficient(k) * power;
        rhs += TruncatedPowerSeries::monomial(order, series.coefficient(k), 4 * k);
        power = power * x_squared;
    }
    // 1/M(1+x, 1-x) = (1+t^2) / M(1+t^2, 1-t^2), so the t^{4k} side carries a (1+t^2) factor.
    return ResidualSeries{lhs - one_plus_t2 * rhs, 2 * k_max};
}

ResidualSeries verify_agm_ode(std::size_t k_max)
{
    if (k_max > kAgmOdeLimit) {
        throw ResourceLimitError("AGM ODE check is limited to k_max <= " + std::to_string(kAgmOdeLimit));
    }
    std::vector<BigRational> coeffs;
    for (std::size_t k = 0; k <= k_max; ++k) {
        coeffs.push_back(gauss_coefficient(k));
    }
    return verify_agm_ode(GaussSeries(TruncatedPowerSeries(std::move(coeffs))));
}

ResidualSeries verify_agm_ode(const GaussSeries& series)
{
    const std::size_t k_max = series.k_max();
    // Work with y as an exact polynomial of degree 2K, padded so y'' exists,
    // then keep only the orders unaffected by the missing A_{K+1} x^{2K+2}.
    const std::size_t work = 2 * k_max + 4;
    const auto y = series.in_x().extended(work);
    const auto dy = y.derivative();
    const auto d2y = dy.derivative();
    const std::size_t order = d2y.order();

    auto mono = [order](long coeff, std::size_t power) {
        return TruncatedPowerSeries::monomial(order, coeff, power);
    };
    const auto residual = (mono(1, 3) - mono(1, 1)) * d2y + (mono(3, 2) - mono(1, 0)) * dy.truncated(order)
                          + mono(1, 1) * y.truncated(order);

    const std::size_t certified = k_max == 0 ? 0 : 2 * k_max - 1;
    return ResidualSeries{residual.truncated(certified), certified};
}

} // namespace interlink
