#pragma once

#include <complex>

namespace interlink
{

using Complex = std::complex<double>;

inline constexpr int kEisensteinMinRadius = 10;
inline constexpr int kWpMinRadius = 50;
inline constexpr double kModularImagGuard = 0.1;

/**
 * Lattice Z tau + Z with tau in the upper half plane, truncated to the disk
 * of nonzero points m tau + n with |m tau + n| <= radius.
 *
 * The disk depends only on the point set, so tau and tau + 1 truncate
 * identically, and every symmetry of the lattice (omega -> -omega always,
 * omega -> i omega or a sixth root of unity for the square and hexagonal
 * lattices) maps the truncated set onto itself.
 */
class LatticeSpec
{
public:
    LatticeSpec(Complex tau, int radius);

    Complex tau() const { return tau_; }
    int radius() const { return radius_; }

private:
    Complex tau_;
    int radius_;
};

// Integer matrix (a b; c d) with ad - bc = 1, acting by tau -> (a tau + b)/(c tau + d).
class UnimodularMatrix
{
public:
    UnimodularMatrix(long a, long b, long c, long d);

    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    long d() const { return d_; }

    Complex apply(Complex tau) const;
    // c tau + d.
    Complex automorphy_factor(Complex tau) const;

private:
    long a_;
    long b_;
    long c_;
    long d_;
};

struct EisensteinValue
{
    Complex value;
    // Rigorous bound on the sum of |omega|^{-2k} outside the disk.
    double tail_bound = 0.0;
};

/// G_{2k} = sum over nonzero disk points of omega^{-2k}; weight in {4, 6, 8, 10, 12}, radius >= 10.
EisensteinValue eisenstein(const LatticeSpec& lattice, int weight);

/// Same sum for a general basis: points m omega1 + n omega2 with |omega| <= radius.
EisensteinValue eisenstein_sum(Complex omega1, Complex omega2, double radius, int weight);

/// Bound on the sum of |omega|^{-weight} over lattice points with |omega| > radius.
double lattice_tail_bound(Complex omega1, Complex omega2, double radius, int weight);

struct ModularityResidual
{
    // |G(gamma tau) - (c tau + d)^{2k} G(tau)| at matched radius.
    double residual = 0.0;
    // tail(gamma tau) + |c tau + d|^{2k} tail(tau): what truncation alone can explain.
    double bound = 0.0;
    Complex transformed_tau;
};

/// Requires Im(gamma tau) >= kModularImagGuard; otherwise RangeError.
ModularityResidual verify_modularity(const LatticeSpec& lattice, const UnimodularMatrix& gamma, int weight);

// g2 = 60 G4 and g3 = 140 G6 of a lattice, both at the lattice's truncation radius.
class WeierstrassInvariants
{
public:
    explicit WeierstrassInvariants(const LatticeSpec& lattice);

    Complex g2() const { return g2_; }
    Complex g3() const { return g3_; }
    Complex g4_sum() const { return g4_; }
    Complex g6_sum() const { return g6_; }
    Complex tau() const { return tau_; }
    int radius() const { return radius_; }

private:
    Complex tau_;
    int radius_;
    Complex g4_;
    Complex g6_;
    Complex g2_;
    Complex g3_;
};

struct WpValue
{
    Complex value;
    Complex derivative;
    // (wp')^2 - (4 wp^3 - g2 wp - g3).
    Complex ode_residual;
};

/// Truncated 1/z^2 + sum' [1/(z-w)^2 - 1/w^2] and its term-wise derivative
/// -2/z^3 - sum' 2/(z-w)^3. Radius must be >= 50 and z at least 0.05 times
/// the shortest period away from every lattice point. The invariants must
/// come from the same lattice and radius.
WpValue wp(const LatticeSpec& lattice, const WeierstrassInvariants& invariants, Complex z);

// Length of the shortest nonzero vector of Z tau + Z.
double shortest_period(Complex tau);
// Distance from z to the nearest point of Z tau + Z.
double distance_to_lattice(Complex tau, Complex z);

} // namespace interlink
