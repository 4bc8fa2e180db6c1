#include "interlink/elliptic.hpp"

#include <cmath>
#include <string>

#include "interlink/agm.hpp"
#include "interlink/errors.hpp"
#include "interlink/quadrature.hpp"

namespace interlink
{

namespace
{

constexpr std::size_t kSeriesTermCap = 500;
constexpr double kSeriesRelativeCutoff = 1e-17;

bool is_nonpositive_integer(double v)
{
    return v <= 0.0 && std::floor(v) == v;
}

} // namespace

Modulus::Modulus(double k) : k_(k)
{
    if (!std::isfinite(k) || k < 0.0 || k >= 1.0) {
        throw RangeError("elliptic modulus must lie in [0, 1), got " + std::to_string(k));
    }
}

HypergeomParams::HypergeomParams(double alpha, double beta, double gamma, double argument, std::size_t n_terms)
    : alpha_(alpha), beta_(beta), gamma_(gamma), argument_(argument), n_terms_(n_terms)
{
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) || !std::isfinite(argument)) {
        throw ArgumentError("hypergeometric parameters must be finite");
    }
    if (is_nonpositive_integer(gamma)) {
        throw ArgumentError("gamma must not be zero or a negative integer");
    }
    if (!(std::abs(argument) < 1.0)) {
        throw RangeError("hypergeometric argument must satisfy |x| < 1");
    }
    if (n_terms == 0) {
        throw ArgumentError("hypergeometric series needs at least one term");
    }
}

double ellip_k_agm(Modulus k)
{
    const double m = k.value();
    return kHalfPi / agm(1.0 + m, 1.0 - m).limit;
}

double ellip_k_quadrature(Modulus k, double abs_tol)
{
    const double k2 = k.value() * k.value();
    auto integrand = [k2](double phi) {
        const double s = std::sin(phi);
        return 1.0 / std::sqrt(1.0 - k2 * s * s);
    };
    return integrate_adaptive(integrand, 0.0, kHalfPi, abs_tol).value;
}

HypergeomResult hypergeom_2f1(const HypergeomParams& p)
{
    // Neumaier-compensated sum; slowly convergent cases need thousands of terms.
    double sum = 0.0;
    double carry = 0.0;
    double term = 1.0;
    HypergeomResult result;
    for (std::size_t n = 0; n < p.n_terms(); ++n) {
        if (n > 0) {
            const double dn = static_cast<double>(n - 1);
            term *= (p.alpha() + dn) * (p.beta() + dn) * p.argument() / ((p.gamma() + dn) * (dn + 1.0));
        }
        const double t = sum + term;
        carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        result.last_term = std::abs(term);
        result.terms = n + 1;
    }
    result.value = sum + carry;
    if (!std::isfinite(result.value)) {
        throw NumericError("hypergeometric partial sum is not finite");
    }
    return result;
}

double ellip_k_series(Modulus k)
{
    const double m = k.value();
    if (m > kSeriesModulusLimit) {
        throw RangeError("series route is limited to k <= 0.95 (got " + std::to_string(m)
                         + "); use the AGM route instead");
    }
    const double u = m * m;
    double sum = 1.0;
    double power = 1.0;
    BigRational coeff = 1;
    for (std::size_t j = 1; j < kSeriesTermCap; ++j) {
        // A_j = A_{j-1} ((2j-1)/(2j))^2, kept exact and rounded once per use.
        BigRational step(static_cast<unsigned long>(2 * j - 1), static_cast<unsigned long>(2 * j));
        coeff *= step * step;
        power *= u;
        const double term = coeff.get_d() * power;
        sum += term;
        if (term < kSeriesRelativeCutoff * sum) {
            break;
        }
    }
    return kHalfPi * sum;
}

} // namespace interlink
