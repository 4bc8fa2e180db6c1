#pragma once

#include <cstddef>

namespace interlink
{

inline constexpr double kHalfPi = 1.57079632679489661923;
inline constexpr double kDefaultQuadratureTolerance = 1e-14;
// Beyond this modulus the Gauss series converges too slowly to be practical.
inline constexpr double kSeriesModulusLimit = 0.95;

// Elliptic modulus k in [0, 1).
class Modulus
{
public:
    explicit Modulus(double k);
    double value() const { return k_; }

private:
    double k_;
};

// Parameters for the Gauss hypergeometric series 2F1(alpha, beta; gamma; x).
class HypergeomParams
{
public:
    HypergeomParams(double alpha, double beta, double gamma, double argument, std::size_t n_terms);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double argument() const { return argument_; }
    std::size_t n_terms() const { return n_terms_; }

private:
    double alpha_;
    double beta_;
    double gamma_;
    double argument_;
    std::size_t n_terms_;
};

struct HypergeomResult
{
    double value = 0.0;
    // |last term added|, a crude truncation indicator.
    double last_term = 0.0;
    std::size_t terms = 0;
};

/// K(k) = (pi/2) / M(1+k, 1-k).
double ellip_k_agm(Modulus k);

/// K(k) by adaptive Gauss-Kronrod quadrature of (1 - k^2 sin^2 phi)^{-1/2} over [0, pi/2].
/// Independent reference for the other two routes.
double ellip_k_quadrature(Modulus k, double abs_tol = kDefaultQuadratureTolerance);

/// Partial sum of 2F1 with n_terms terms, built from
/// term_{n+1} = term_n (alpha+n)(beta+n) x / ((gamma+n)(n+1)).
HypergeomResult hypergeom_2f1(const HypergeomParams& params);

/// K(k) = (pi/2) sum A_j k^{2j} with exact Gauss coefficients, for k <= kSeriesModulusLimit.
double ellip_k_series(Modulus k);

} // namespace interlink
