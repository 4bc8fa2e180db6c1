#include <cmath>
#include <vector>

#include "doctest.h"
#include "interlink/errors.hpp"
#include "interlink/modular.hpp"

using interlink::Complex;
using interlink::LatticeSpec;
using interlink::UnimodularMatrix;

namespace
{

const double kPi = std::acos(-1.0);
const Complex kSquare(0.0, 1.0);
const Complex kGeneric(0.3, 1.1);
const Complex kHex(-0.5, std::sqrt(3.0) / 2.0);

double divisor_power_sum(long n, int power)
{
    double s = 0.0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += std::pow(static_cast<double>(d), power);
        }
    }
    return s;
}

// G_4 = (pi^4/45)(1 + 240 sum sigma_3(n) q^n), G_6 = (2 pi^6/945)(1 - 504 sum sigma_5(n) q^n), q = e^{2 pi i tau}.
Complex g4_q_expansion(Complex tau)
{
    const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tau);
    Complex sum = 0.0;
    Complex qn = 1.0;
    for (long n = 1; n <= 60; ++n) {
        qn *= q;
        sum += divisor_power_sum(n, 3) * qn;
    }
    return std::pow(kPi, 4) / 45.0 * (1.0 + 240.0 * sum);
}

Complex g6_q_expansion(Complex tau)
{
    const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tau);
    Complex sum = 0.0;
    Complex qn = 1.0;
    for (long n = 1; n <= 60; ++n) {
        qn *= q;
        sum += divisor_power_sum(n, 5) * qn;
    }
    return 2.0 * std::pow(kPi, 6) / 945.0 * (1.0 - 504.0 * sum);
}

// Laurent series of wp at 0 from g2, g3.
Complex wp_laurent(Complex z, Complex g2, Complex g3)
{
    std::vector<Complex> c(12, 0.0);
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (int k = 4; k < 12; ++k) {
        Complex s = 0.0;
        for (int m = 2; m <= k - 2; ++m) {
            s += c[m] * c[k - m];
        }
        c[k] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
    }
    Complex value = 1.0 / (z * z);
    for (int k = 2; k < 12; ++k) {
        value += c[k] * std::pow(z, 2 * k - 2);
    }
    return value;
}

interlink::WpValue wp_at(Complex tau, int radius, Complex z)
{
    const LatticeSpec lattice(tau, radius);
    return interlink::wp(lattice, interlink::WeierstrassInvariants(lattice), z);
}

} // namespace

TEST_CASE("lattice and matrix guards")
{
    CHECK_THROWS_AS(LatticeSpec(Complex(0.0, 0.0), 100), interlink::ArgumentError);
    CHECK_THROWS_AS(LatticeSpec(Complex(0.2, -1.0), 100), interlink::ArgumentError);
    CHECK_THROWS_AS(LatticeSpec(kSquare, 0), interlink::ArgumentError);
    CHECK_THROWS_AS(UnimodularMatrix(1, 1, 1, 1), interlink::ArgumentError);
    CHECK_NOTHROW(UnimodularMatrix(2, 1, 1, 1));
}

TEST_CASE("weight and radius guards")
{
    const LatticeSpec lattice(kSquare, 100);
    CHECK_THROWS_AS(interlink::eisenstein(lattice, 2), interlink::ArgumentError);
    CHECK_THROWS_AS(interlink::eisenstein(lattice, 5), interlink::ArgumentError);
    CHECK_THROWS_AS(interlink::eisenstein(lattice, 14), interlink::ArgumentError);
    CHECK_THROWS_AS(interlink::eisenstein(LatticeSpec(kSquare, 9), 4), interlink::ArgumentError);
    for (int w : {4, 6, 8, 10, 12}) {
        CHECK_NOTHROW(interlink::eisenstein(lattice, w));
    }
}

TEST_CASE("symmetry zeros")
{
    const auto g6 = interlink::eisenstein(LatticeSpec(kSquare, 100), 6);
    CHECK(std::abs(g6.value) < 1e-6);
    CHECK(std::abs(g6.value) <= g6.tail_bound);
    const auto g4 = interlink::eisenstein(LatticeSpec(kHex, 100), 4);
    CHECK(std::abs(g4.value) < 1e-6);
    CHECK(std::abs(g4.value) <= g4.tail_bound);
    // Odd multiples of the symmetry order vanish too.
    CHECK(std::abs(interlink::eisenstein(LatticeSpec(kSquare, 100), 10).value) < 1e-12);
    CHECK(std::abs(interlink::eisenstein(LatticeSpec(kHex, 100), 8).value) < 1e-10);
}

TEST_CASE("values agree with q-expansions")
{
    for (Complex tau : {kSquare, kGeneric, Complex(-0.4, 0.9)}) {
        const LatticeSpec lattice(tau, 400);
        const auto g4 = interlink::eisenstein(lattice, 4);
        const auto g6 = interlink::eisenstein(lattice, 6);
        CAPTURE(tau);
        CHECK(std::abs(g4.value - g4_q_expansion(tau)) <= g4.tail_bound);
        CHECK(std::abs(g6.value - g6_q_expansion(tau)) <= g6.tail_bound);
        CHECK(std::abs(g4.value - g4_q_expansion(tau)) < 1e-8);
        CHECK(std::abs(g6.value - g6_q_expansion(tau)) < 1e-8);
    }
    // G_4(i) = Gamma(1/4)^8 / (960 pi^2).
    const double lemniscatic = std::pow(std::tgamma(0.25), 8) / (960.0 * kPi * kPi);
    CHECK(std::abs(interlink::eisenstein(LatticeSpec(kSquare, 400), 4).value - lemniscatic) < 1e-8);
}

TEST_CASE("refinement: G_4 at 0.3 + 1.1i is stable between R = 200 and 400")
{
    const auto r200 = interlink::eisenstein(LatticeSpec(kGeneric, 200), 4);
    const auto r400 = interlink::eisenstein(LatticeSpec(kGeneric, 400), 4);
    CHECK(std::abs(r200.value - r400.value) < 1e-8);
    CHECK(std::abs(r200.value - r400.value) <= r200.tail_bound);
    CHECK(r400.tail_bound < r200.tail_bound);
}

TEST_CASE("property: doubling R changes G by less than the tail bound")
{
    for (Complex tau : {kSquare, kHex, kGeneric, Complex(0.45, 0.95), Complex(0.1, 2.5)}) {
        for (int w : {4, 6, 8}) {
            for (int r : {10, 40, 160}) {
                const auto low = interlink::eisenstein(LatticeSpec(tau, r), w);
                const auto high = interlink::eisenstein(LatticeSpec(tau, 2 * r), w);
                CAPTURE(tau);
                CAPTURE(w);
                CAPTURE(r);
                CHECK(std::abs(high.value - low.value) <= low.tail_bound);
            }
        }
    }
}

TEST_CASE("property: scaling homogeneity G(c L) = c^{-2k} G(L)")
{
    for (Complex c : {Complex(2.0, 0.0), Complex(0.0, 1.0), Complex(0.0, 2.0), Complex(-1.0, 0.0)}) {
        for (int w : {4, 6, 12}) {
            const auto base = interlink::eisenstein_sum(kGeneric, 1.0, 60.0, w);
            const auto scaled = interlink::eisenstein_sum(c * kGeneric, c, 60.0 * std::abs(c), w);
            const Complex expected = std::pow(c, -w) * base.value;
            CAPTURE(c);
            CAPTURE(w);
            CHECK(std::abs(scaled.value - expected) <= 1e-14 * std::abs(expected) + 1e-300);
        }
    }
}

TEST_CASE("modularity")
{
    const LatticeSpec lattice(kGeneric, 200);
    CHECK(interlink::verify_modularity(lattice, UnimodularMatrix(1, 0, 0, 1), 4).residual == 0.0);
    CHECK(interlink::verify_modularity(lattice, UnimodularMatrix(1, 1, 0, 1), 4).residual < 1e-10);
    CHECK(interlink::verify_modularity(lattice, UnimodularMatrix(1, -3, 0, 1), 6).residual < 1e-10);

    const auto inv = interlink::verify_modularity(LatticeSpec(kGeneric, 300), UnimodularMatrix(0, -1, 1, 0), 4);
    CHECK(inv.residual < 1e-5);
    CHECK(inv.residual <= inv.bound);
    CHECK(std::abs(inv.transformed_tau - (-1.0 / kGeneric)) < 1e-15);

    CHECK_THROWS_AS(
        interlink::verify_modularity(LatticeSpec(Complex(0.0, 11.0), 100), UnimodularMatrix(0, -1, 1, 0), 4),
        interlink::RangeError);
}

TEST_CASE("property: modularity residual shrinks and stays within its bound")
{
    const UnimodularMatrix st(1, -1, 1, 0);
    const UnimodularMatrix inversion(0, -1, 1, 0);
    for (const auto& gamma : {st, inversion}) {
        for (int w : {4, 6}) {
            double previous = INFINITY;
            for (int r : {50, 100, 200, 400}) {
                const auto m = interlink::verify_modularity(LatticeSpec(kGeneric, r), gamma, w);
                CAPTURE(w);
                CAPTURE(r);
                CHECK(m.residual <= m.bound);
                // Weight 6 is already at roundoff here; only weight 4 still carries a visible tail.
                if (w == 4) {
                    CHECK(m.residual < previous);
                }
                previous = m.residual;
            }
        }
    }
}

TEST_CASE("Weierstrass invariants")
{
    const LatticeSpec lattice(kGeneric, 100);
    const interlink::WeierstrassInvariants inv(lattice);
    CHECK(inv.g2() == 60.0 * interlink::eisenstein(lattice, 4).value);
    CHECK(inv.g3() == 140.0 * interlink::eisenstein(lattice, 6).value);
    CHECK(inv.radius() == 100);
}

TEST_CASE("wp guards")
{
    const LatticeSpec lattice(kSquare, 100);
    const interlink::WeierstrassInvariants inv(lattice);
    CHECK_THROWS_AS(interlink::wp(lattice, inv, Complex(0.0, 0.0)), interlink::RangeError);
    CHECK_THROWS_AS(interlink::wp(lattice, inv, Complex(1.02, 0.01)), interlink::RangeError);
    CHECK_THROWS_AS(interlink::wp(lattice, inv, Complex(0.03, 0.98)), interlink::RangeError);
    CHECK_NOTHROW(interlink::wp(lattice, inv, Complex(0.06, 0.0)));

    const LatticeSpec other(kSquare, 200);
    CHECK_THROWS_AS(interlink::wp(other, inv, Complex(0.3, 0.2)), interlink::ArgumentError);
    const LatticeSpec small(kSquare, 40);
    CHECK_THROWS_AS(interlink::wp(small, interlink::WeierstrassInvariants(small), Complex(0.3, 0.2)),
                    interlink::ArgumentError);
}

TEST_CASE("wp is even")
{
    const Complex z(0.3, 0.2);
    CHECK(std::abs(wp_at(kSquare, 100, z).value - wp_at(kSquare, 100, -z).value) < 1e-10);
    CHECK(std::abs(wp_at(kSquare, 100, z).derivative + wp_at(kSquare, 100, -z).derivative) < 1e-9);
}

TEST_CASE("property: evenness at random points and lattices")
{
    unsigned state = 12345;
    auto next = [&] {
        state = state * 1103515245u + 12345u;
        return static_cast<double>((state >> 8) & 0xffff) / 65536.0;
    };
    for (int trial = 0; trial < 12; ++trial) {
        const Complex tau(next() - 0.5, 0.8 + next());
        const Complex z(next() * 0.9 + 0.05, next() * 0.5 + 0.05);
        const LatticeSpec lattice(tau, 60);
        const interlink::WeierstrassInvariants inv(lattice);
        if (interlink::distance_to_lattice(tau, z) < 0.05 * interlink::shortest_period(tau)) {
            continue;
        }
        const auto plus = interlink::wp(lattice, inv, z);
        const auto minus = interlink::wp(lattice, inv, -z);
        CHECK(std::abs(plus.value - minus.value) <= 1e-10 * std::max(1.0, std::abs(plus.value)));
    }
}

TEST_CASE("wp near the origin matches its Laurent series")
{
    const Complex z(0.07, 0.03);
    const auto p = wp_at(kGeneric, 400, z);
    const Complex g2 = 60.0 * g4_q_expansion(kGeneric);
    const Complex g3 = 140.0 * g6_q_expansion(kGeneric);
    CHECK(std::abs(p.value - wp_laurent(z, g2, g3)) < 1e-9);
}

TEST_CASE("refinement: periodicity and differential-equation residuals shrink with R")
{
    const Complex z(0.3, 0.2);
    double last_period = INFINITY;
    double last_ode = INFINITY;
    for (int r : {50, 100, 200, 400}) {
        const auto at_z = wp_at(kSquare, r, z);
        const double period = std::abs(wp_at(kSquare, r, z + 1.0).value - at_z.value);
        const double ode = std::abs(at_z.ode_residual);
        CAPTURE(r);
        CHECK(period < last_period);
        CHECK(ode < last_ode);
        if (r == 200) {
            CHECK(period < 1e-4);
            CHECK(ode < 1e-4);
        }
        last_period = period;
        last_ode = ode;
    }
}

TEST_CASE("lattice geometry helpers")
{
    CHECK(interlink::shortest_period(kSquare) == doctest::Approx(1.0));
    // 2 tau - 1 = 0.4i is shorter than tau itself.
    CHECK(interlink::shortest_period(Complex(0.5, 0.2)) == doctest::Approx(0.4));
    CHECK(interlink::distance_to_lattice(kSquare, Complex(0.5, 0.5)) == doctest::Approx(std::sqrt(0.5)));
    CHECK(interlink::distance_to_lattice(kSquare, Complex(3.1, -2.0)) == doctest::Approx(0.1));
}
