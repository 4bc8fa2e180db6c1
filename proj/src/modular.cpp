#include "interlink/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "interlink/errors.hpp"
#include "interlink/summation.hpp"

namespace interlink
{

namespace
{

constexpr double kPiValue = 3.14159265358979323846;

void check_weight(int weight)
{
    if (weight == 2) {
        throw ArgumentError("weight 2 is excluded: the lattice sum is only conditionally convergent");
    }
    if (weight % 2 != 0 || weight < 4 || weight > 12) {
        throw ArgumentError("weight must be one of 4, 6, 8, 10, 12, got " + std::to_string(weight));
    }
}

// 1/w as conj(w)/|w|^2; sign-symmetric, so -w gives exactly the negated result.
Complex reciprocal(Complex w)
{
    const double norm = w.real() * w.real() + w.imag() * w.imag();
    return {w.real() / norm, -w.imag() / norm};
}

// w^{-weight} for even weight by a fixed multiplication chain.
Complex inverse_power(Complex w, int weight)
{
    const Complex inv = reciprocal(w);
    const Complex inv2 = inv * inv;
    Complex result = inv2;
    for (int k = 1; k < weight / 2; ++k) {
        result *= inv2;
    }
    return result;
}

// Visits every nonzero m omega1 + n omega2 with |omega| <= radius, row by row in increasing m, n.
template <typename Visit>
void for_each_disk_point(Complex omega1, Complex omega2, double radius, Visit&& visit)
{
    const double area = std::abs(omega1.real() * omega2.imag() - omega1.imag() * omega2.real());
    const double len2 = std::abs(omega2);
    const double r2 = radius * radius;
    // Row m is the line m omega1 + t omega2, at distance |m| area / |omega2| from 0.
    const auto rows = static_cast<long>(std::floor(radius * len2 / area));
    for (long m = -rows; m <= rows; ++m) {
        const Complex base = static_cast<double>(m) * omega1;
        const double centre = -(base.real() * omega2.real() + base.imag() * omega2.imag()) / (len2 * len2);
        const double dist = static_cast<double>(std::abs(m)) * area / len2;
        const double half_width = std::sqrt(std::max(0.0, r2 - dist * dist)) / len2;
        const auto first = static_cast<long>(std::floor(centre - half_width)) - 1;
        const auto last = static_cast<long>(std::ceil(centre + half_width)) + 1;
        for (long n = first; n <= last; ++n) {
            if (m == 0 && n == 0) {
                continue;
            }
            const Complex w = base + static_cast<double>(n) * omega2;
            if (w.real() * w.real() + w.imag() * w.imag() <= r2) {
                visit(w);
            }
        }
    }
}

} // namespace

LatticeSpec::LatticeSpec(Complex tau, int radius) : tau_(tau), radius_(radius)
{
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) || !(tau.imag() > 0.0)) {
        throw ArgumentError("tau must lie in the upper half plane");
    }
    if (radius < 1) {
        throw ArgumentError("truncation radius must be at least 1, got " + std::to_string(radius));
    }
}

UnimodularMatrix::UnimodularMatrix(long a, long b, long c, long d) : a_(a), b_(b), c_(c), d_(d)
{
    if (a * d - b * c != 1) {
        throw ArgumentError("matrix determinant must be 1, got " + std::to_string(a * d - b * c));
    }
}

Complex UnimodularMatrix::apply(Complex tau) const
{
    if (c_ == 0) {
        // a = d = +-1, so dividing by d is multiplying by d.
        return (static_cast<double>(a_) * tau + static_cast<double>(b_)) * static_cast<double>(d_);
    }
    return (static_cast<double>(a_) * tau + static_cast<double>(b_)) / automorphy_factor(tau);
}

Complex UnimodularMatrix::automorphy_factor(Complex tau) const
{
    return static_cast<double>(c_) * tau + static_cast<double>(d_);
}

double lattice_tail_bound(Complex omega1, Complex omega2, double radius, int weight)
{
    // Each point outside the disk owns a fundamental cell of area A lying
    // outside radius R - d, on which |y| <= |omega| (1 + d/R).
    const double area = std::abs(omega1.real() * omega2.imag() - omega1.imag() * omega2.real());
    const double half_diameter = 0.5 * std::max(std::abs(omega1 + omega2), std::abs(omega1 - omega2));
    if (radius <= half_diameter) {
        return std::numeric_limits<double>::infinity();
    }
    const double w = static_cast<double>(weight);
    return std::pow(1.0 + half_diameter / radius, w) * 2.0 * kPiValue / area
           * std::pow(radius - half_diameter, 2.0 - w) / (w - 2.0);
}

EisensteinValue eisenstein_sum(Complex omega1, Complex omega2, double radius, int weight)
{
    check_weight(weight);
    if (!(radius >= 1.0) || !std::isfinite(radius)) {
        throw ArgumentError("truncation radius must be at least 1");
    }
    if (!(std::abs(omega1.real() * omega2.imag() - omega1.imag() * omega2.real()) > 0.0)) {
        throw ArgumentError("periods must be linearly independent over R");
    }
    ComplexCompensatedSum sum;
    for_each_disk_point(omega1, omega2, radius, [&](Complex w) { sum.add(inverse_power(w, weight)); });
    return EisensteinValue{sum.value(), lattice_tail_bound(omega1, omega2, radius, weight)};
}

EisensteinValue eisenstein(const LatticeSpec& lattice, int weight)
{
    check_weight(weight);
    if (lattice.radius() < kEisensteinMinRadius) {
        throw ArgumentError("Eisenstein sums need radius >= 10, got " + std::to_string(lattice.radius()));
    }
    return eisenstein_sum(lattice.tau(), Complex(1.0, 0.0), static_cast<double>(lattice.radius()), weight);
}

ModularityResidual verify_modularity(const LatticeSpec& lattice, const UnimodularMatrix& gamma, int weight)
{
    check_weight(weight);
    const Complex moved = gamma.apply(lattice.tau());
    if (!(moved.imag() >= kModularImagGuard)) {
        throw RangeError("Im(gamma tau) = " + std::to_string(moved.imag()) + " is below the 0.1 conditioning guard");
    }
    const auto original = eisenstein(lattice, weight);
    const auto transformed = eisenstein(LatticeSpec(moved, lattice.radius()), weight);

    Complex factor(1.0, 0.0);
    const Complex cd = gamma.automorphy_factor(lattice.tau());
    for (int i = 0; i < weight; ++i) {
        factor *= cd;
    }
    ModularityResidual r;
    r.transformed_tau = moved;
    r.residual = std::abs(transformed.value - factor * original.value);
    r.bound = transformed.tail_bound + std::abs(factor) * original.tail_bound;
    return r;
}

WeierstrassInvariants::WeierstrassInvariants(const LatticeSpec& lattice)
    : tau_(lattice.tau()), radius_(lattice.radius())
{
    g4_ = eisenstein(lattice, 4).value;
    g6_ = eisenstein(lattice, 6).value;
    g2_ = 60.0 * g4_;
    g3_ = 140.0 * g6_;
}

double shortest_period(Complex tau)
{
    // Z tau + Z contains 1, so only rows with |m| Im(tau) <= 1 can beat it.
    const long rows = static_cast<long>(std::floor(1.0 / tau.imag()));
    double best = 1.0;
    for (long m = -rows; m <= rows; ++m) {
        const double centre = std::round(-static_cast<double>(m) * tau.real());
        for (double n = centre - 1.0; n <= centre + 1.0; n += 1.0) {
            if (m == 0 && n == 0.0) {
                continue;
            }
            best = std::min(best, std::abs(static_cast<double>(m) * tau + n));
        }
    }
    return best;
}

double distance_to_lattice(Complex tau, Complex z)
{
    const double m0 = std::round(z.imag() / tau.imag());
    const double n0 = std::round((z - m0 * tau).real());
    const double guess = std::abs(z - m0 * tau - n0);
    const double span = std::ceil(guess / tau.imag()) + 1.0;
    double best = guess;
    for (double m = m0 - span; m <= m0 + span; m += 1.0) {
        const double centre = std::round((z - m * tau).real());
        for (double n = centre - 1.0; n <= centre + 1.0; n += 1.0) {
            best = std::min(best, std::abs(z - m * tau - n));
        }
    }
    return best;
}

WpValue wp(const LatticeSpec& lattice, const WeierstrassInvariants& invariants, Complex z)
{
    if (invariants.tau() != lattice.tau() || invariants.radius() != lattice.radius()) {
        throw ArgumentError("Weierstrass invariants were computed for a different lattice or radius");
    }
    if (lattice.radius() < kWpMinRadius) {
        throw ArgumentError("wp needs radius >= 50, got " + std::to_string(lattice.radius()));
    }
    const Complex tau = lattice.tau();
    const double clearance = 0.05 * shortest_period(tau);
    if (!(distance_to_lattice(tau, z) >= clearance)) {
        throw RangeError("z is within 0.05 periods of a lattice point");
    }

    ComplexCompensatedSum value;
    ComplexCompensatedSum derivative;
    const Complex inv_z = reciprocal(z);
    value.add(inv_z * inv_z);
    derivative.add(-2.0 * inv_z * inv_z * inv_z);
    for_each_disk_point(tau, Complex(1.0, 0.0), static_cast<double>(lattice.radius()), [&](Complex w) {
        const Complex inv_shift = reciprocal(z - w);
        const Complex inv_w = reciprocal(w);
        const Complex shift2 = inv_shift * inv_shift;
        value.add(shift2 - inv_w * inv_w);
        derivative.add(-2.0 * shift2 * inv_shift);
    });
    WpValue result;
    result.value = value.value();
    result.derivative = derivative.value();
    const Complex p = result.value;
    result.ode_residual = result.derivative * result.derivative
                          - (4.0 * p * p * p - invariants.g2() * p - invariants.g3());
    return result;
}

} // namespace interlink
