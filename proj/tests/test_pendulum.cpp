#include <cmath>
#include <vector>

#include "doctest.h"
#include "interlink/elliptic.hpp"
#include "interlink/errors.hpp"
#include "interlink/pendulum.hpp"

using interlink::kPi;
using interlink::kStandardGravity;
using interlink::PendulumBase;
using interlink::PendulumConfig;

namespace
{

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

double exact(double theta0, double length = 1.0, double gravity = kStandardGravity)
{
    return interlink::exact_period(PendulumConfig(length, gravity, theta0)).period_s;
}

// Step T0 / steps_per_period.
double simulated(double theta0, double steps_per_period)
{
    const PendulumConfig cfg(1.0, kStandardGravity, theta0);
    return interlink::simulate_period(cfg, cfg.small_angle_period() / steps_per_period).period_s;
}

} // namespace

TEST_CASE("configuration guards")
{
    CHECK_THROWS_AS(PendulumConfig(1.0, kStandardGravity, kPi), interlink::RangeError);
    CHECK_THROWS_AS(PendulumConfig(1.0, kStandardGravity, 4.0), interlink::RangeError);
    CHECK_THROWS_AS(PendulumConfig(1.0, kStandardGravity, 0.0), interlink::RangeError);
    CHECK_THROWS_AS(PendulumConfig(1.0, kStandardGravity, -0.5), interlink::RangeError);
    CHECK_THROWS_AS(PendulumConfig(0.0, kStandardGravity, 1.0), interlink::ArgumentError);
    CHECK_THROWS_AS(PendulumConfig(1.0, -1.0, 1.0), interlink::ArgumentError);
    CHECK_THROWS_AS(PendulumBase(1.0, 0.0), interlink::ArgumentError);
}

TEST_CASE("closed form")
{
    const PendulumConfig normalised(1.0, kPi * kPi, 1e-4);
    CHECK(normalised.small_angle_period() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(interlink::exact_period(normalised).period_s - 2.0) < 2e-9);

    CHECK(exact(2.0) > exact(1.0));

    const auto r = interlink::exact_period(PendulumConfig(1.0, kStandardGravity, kPi / 2));
    CHECK(r.method == interlink::PeriodMethod::closed_form);
    const auto& d = std::get<interlink::ClosedFormDetail>(r.detail);
    CHECK(d.modulus == doctest::Approx(std::sin(kPi / 4)));
    CHECK(rel(d.agm_form, d.elliptic_form) < 1e-12);
    REQUIRE(d.hypergeometric_form.has_value());
    CHECK(rel(*d.hypergeometric_form, d.elliptic_form) < 1e-12);
    CHECK(interlink::to_string(r.method) == "closed-form");
}

TEST_CASE("property: period exceeds T0, grows with amplitude, scales as sqrt(L)")
{
    double previous = 0.0;
    for (int i = 1; i < 60; ++i) {
        const double theta0 = 0.05 * i;
        const PendulumConfig cfg(1.0, kStandardGravity, theta0);
        const double t = interlink::exact_period(cfg).period_s;
        CHECK(t > cfg.small_angle_period());
        CHECK(t > previous);
        previous = t;
        CHECK(rel(exact(theta0, 4.0), 2.0 * exact(theta0, 1.0)) < 1e-14);
        CHECK(rel(exact(theta0, 2.5), std::sqrt(2.5) * exact(theta0, 1.0)) < 1e-14);
    }
}

TEST_CASE("simulation examples")
{
    const PendulumConfig small(1.0, kStandardGravity, 0.01);
    const auto r = interlink::simulate_period(small, small.small_angle_period() / 2000);
    CHECK(rel(r.period_s, small.small_angle_period()) < 2e-5);
    CHECK(r.method == interlink::PeriodMethod::simulated);

    CHECK(rel(simulated(kPi / 2, 1e5), exact(kPi / 2)) <= 1e-6);
    CHECK(rel(simulated(3.0, 1e5), exact(3.0)) <= 1e-5);
}

TEST_CASE("simulation guards")
{
    const PendulumConfig cfg(1.0, kStandardGravity, 1.0);
    CHECK_THROWS_AS(interlink::simulate_period(cfg, cfg.small_angle_period() / 999), interlink::ArgumentError);
    CHECK_THROWS_AS(interlink::simulate_period(cfg, 0.0), interlink::ArgumentError);
    CHECK_THROWS_AS(interlink::simulate_period(cfg, -1e-4), interlink::ArgumentError);
}

TEST_CASE("property: cross-validation and fourth-order convergence")
{
    for (double theta0 : {0.1, 0.5, 1.0, 2.0}) {
        CAPTURE(theta0);
        const double t = exact(theta0);
        CHECK(rel(simulated(theta0, 1e5), t) <= 1e-6);
        const double coarse = std::abs(simulated(theta0, 1000) - t);
        const double fine = std::abs(simulated(theta0, 2000) - t);
        CHECK(std::log2(coarse / fine) >= 3.5);
    }
}

TEST_CASE("property: energy drift stays below 1e-8")
{
    for (double theta0 : {0.1, 1.0, 2.5, 3.0}) {
        const PendulumConfig cfg(1.0, kStandardGravity, theta0);
        const auto r = interlink::simulate_period(cfg, cfg.small_angle_period() / 1000);
        const auto& d = std::get<interlink::SimulationDetail>(r.detail);
        CAPTURE(theta0);
        CHECK(d.max_energy_drift <= 1e-8);
        CHECK(d.crossings >= 2);
        CHECK(d.steps > 1000);
    }
}

TEST_CASE("ratio table")
{
    const std::vector<double> amplitudes{1e-6, 0.5, kPi / 2, 2.5};
    const auto a = interlink::period_ratio_table(PendulumBase(1.0, 9.8), amplitudes);
    const auto b = interlink::period_ratio_table(PendulumBase(2.0, 3.0), amplitudes);
    REQUIRE(a.size() == amplitudes.size());
    CHECK(std::abs(a[0].ratio - 1.0) < 1e-12);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].amplitude == amplitudes[i]);
        CHECK(std::abs(a[i].ratio - b[i].ratio) <= 1e-14);
    }
    const double k_quad = interlink::ellip_k_quadrature(interlink::Modulus(std::sin(kPi / 4)));
    CHECK(std::abs(a[2].ratio - k_quad / interlink::kHalfPi) < 1e-13);

    const std::vector<double> bad{0.5, kPi};
    CHECK_THROWS_AS(interlink::period_ratio_table(PendulumBase(1.0, 9.8), bad), interlink::RangeError);
}
