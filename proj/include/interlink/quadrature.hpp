#pragma once

#include <cstddef>
#include <functional>

namespace interlink
{

struct QuadratureResult
{
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
};

/**
 * Adaptive 7/15-point Gauss-Kronrod quadrature with interval bisection.
 *
 * The interval with the largest local error |K15 - G7| is split until the
 * summed error estimate drops to abs_tol. Throws ConvergenceError if that
 * does not happen within max_intervals subintervals.
 */
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower, double upper,
                                    double abs_tol, std::size_t max_intervals = 2000);

} // namespace interlink
