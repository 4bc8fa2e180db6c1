#include "interlink/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "interlink/agm.hpp"
#include "interlink/elliptic.hpp"
#include "interlink/errors.hpp"

namespace interlink
{

namespace
{

constexpr double kFormAgreement = 1e-12;
constexpr double kEnergyDriftLimit = 1e-8;
constexpr double kSearchPeriods = 10.0;
constexpr std::size_t kHypergeometricTermCap = 2'000'000;

void check_length_gravity(double length, double gravity)
{
    if (!std::isfinite(length) || !(length > 0.0)) {
        throw ArgumentError("pendulum length must be positive and finite");
    }
    if (!std::isfinite(gravity) || !(gravity > 0.0)) {
        throw ArgumentError("gravity must be positive and finite");
    }
}

struct State
{
    double theta;
    double omega;
};

State rk4_step(const State& s, double c, double dt)
{
    auto accel = [c](double theta) { return -c * std::sin(theta); };
    const double k1t = s.omega;
    const double k1w = accel(s.theta);
    const double k2t = s.omega + 0.5 * dt * k1w;
    const double k2w = accel(s.theta + 0.5 * dt * k1t);
    const double k3t = s.omega + 0.5 * dt * k2w;
    const double k3w = accel(s.theta + 0.5 * dt * k2t);
    const double k4t = s.omega + dt * k3w;
    const double k4w = accel(s.theta + dt * k3t);
    return State{s.theta + dt / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t),
                 s.omega + dt / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w)};
}

// Energy per unit m L^2, measured from the bottom of the swing.
double energy(const State& s, double c)
{
    const double half_sin = std::sin(0.5 * s.theta);
    return 0.5 * s.omega * s.omega + 2.0 * c * half_sin * half_sin;
}

// Root in [0, 1] of the cubic Hermite interpolant of omega over one step,
// using the endpoint accelerations as slopes.
double hermite_root(double w0, double w1, double a0, double a1, double dt)
{
    auto eval = [&](double s) {
        const double s2 = s * s;
        const double s3 = s2 * s;
        const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        const double h10 = s3 - 2.0 * s2 + s;
        const double h01 = -2.0 * s3 + 3.0 * s2;
        const double h11 = s3 - s2;
        return h00 * w0 + h10 * dt * a0 + h01 * w1 + h11 * dt * a1;
    };
    double lo = 0.0;
    double hi = 1.0;
    const bool rising = w0 < w1;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double v = eval(mid);
        if ((v < 0.0) == rising) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::size_t hypergeometric_terms_needed(double x)
{
    if (x == 0.0) {
        return 1;
    }
    // Terms decay no slower than x^n; ask for x^n below 1e-17 (1 - x).
    const double n = std::log(1e-17 * (1.0 - x)) / std::log(x);
    if (!(n < static_cast<double>(kHypergeometricTermCap))) {
        return 0;
    }
    return static_cast<std::size_t>(n) + 2;
}

} // namespace

PendulumConfig::PendulumConfig(double length, double gravity, double amplitude)
    : length_(length), gravity_(gravity), amplitude_(amplitude)
{
    check_length_gravity(length, gravity);
    if (!std::isfinite(amplitude) || !(amplitude > 0.0) || !(amplitude < kPi)) {
        throw RangeError("amplitude must lie in (0, pi) radians, got " + std::to_string(amplitude));
    }
}

double PendulumConfig::small_angle_period() const
{
    return 2.0 * kPi * std::sqrt(length_ / gravity_);
}

PendulumBase::PendulumBase(double length, double gravity) : length_(length), gravity_(gravity)
{
    check_length_gravity(length, gravity);
}

std::string to_string(PeriodMethod method)
{
    return method == PeriodMethod::closed_form ? "closed-form" : "simulated";
}

PeriodResult exact_period(const PendulumConfig& cfg)
{
    const double k = std::sin(0.5 * cfg.amplitude());
    const double root = std::sqrt(cfg.length() / cfg.gravity());

    ClosedFormDetail detail;
    detail.modulus = k;
    detail.elliptic_form = 4.0 * root * ellip_k_agm(Modulus(k));
    detail.agm_form = 2.0 * kPi * root / agm(1.0 + k, 1.0 - k).limit;
    detail.form_used = "4*sqrt(L/g)*K(k)";

    auto check = [&](double other, const char* name) {
        if (std::abs(other - detail.elliptic_form) > kFormAgreement * detail.elliptic_form) {
            throw NumericError(std::string("period forms disagree: ") + name + " = " + std::to_string(other)
                               + " vs elliptic form " + std::to_string(detail.elliptic_form));
        }
    };
    check(detail.agm_form, "AGM form");

    const double x = k * k;
    if (const std::size_t terms = hypergeometric_terms_needed(x); terms > 0) {
        const auto f = hypergeom_2f1(HypergeomParams(0.5, 0.5, 1.0, x, terms));
        detail.hypergeometric_form = 2.0 * kPi * root * f.value;
        check(*detail.hypergeometric_form, "hypergeometric form");
    }

    return PeriodResult{detail.elliptic_form, PeriodMethod::closed_form, detail};
}

PeriodResult simulate_period(const PendulumConfig& cfg, double dt)
{
    const double t0 = cfg.small_angle_period();
    if (!std::isfinite(dt) || !(dt > 0.0) || dt > t0 / 1000.0) {
        throw ArgumentError("time step must lie in (0, T0/1000] = (0, " + std::to_string(t0 / 1000.0) + "], got "
                            + std::to_string(dt));
    }
    const double c = cfg.gravity() / cfg.length();
    State state{cfg.amplitude(), 0.0};
    const double e0 = energy(state, c);

    SimulationDetail detail;
    detail.dt = dt;

    const auto max_steps = static_cast<std::size_t>(std::ceil(kSearchPeriods * t0 / dt));
    double crossing_up = -1.0;
    for (std::size_t i = 0; i < max_steps; ++i) {
        const State next = rk4_step(state, c, dt);
        ++detail.steps;

        const double drift = std::abs(energy(next, c) - e0) / e0;
        detail.max_energy_drift = std::max(detail.max_energy_drift, drift);
        if (drift > kEnergyDriftLimit) {
            throw IntegrationQualityError("energy drift " + std::to_string(drift) + " exceeds 1e-8 at step "
                                          + std::to_string(i + 1) + "; reduce dt");
        }

        // The start is an exact zero of omega; it is not a crossing.
        const bool crosses = (state.omega < 0.0 && next.omega >= 0.0) || (state.omega > 0.0 && next.omega <= 0.0);
        if (crosses) {
            const double s = hermite_root(state.omega, next.omega, -c * std::sin(state.theta),
                                          -c * std::sin(next.theta), dt);
            const double t = (static_cast<double>(i) + s) * dt;
            ++detail.crossings;
            if (state.omega < 0.0) {
                crossing_up = t;
            } else if (crossing_up >= 0.0) {
                return PeriodResult{2.0 * (t - crossing_up), PeriodMethod::simulated, detail};
            }
        }
        state = next;
    }
    throw SimulationError("no full swing detected within 10 small-angle periods");
}

std::vector<PeriodRatioRow> period_ratio_table(const PendulumBase& base, std::span<const double> amplitudes)
{
    std::vector<PeriodRatioRow> rows;
    rows.reserve(amplitudes.size());
    for (const double amplitude : amplitudes) {
        const auto cfg = base.with_amplitude(amplitude);
        const double ratio = ellip_k_agm(Modulus(std::sin(0.5 * amplitude))) / kHalfPi;
        const double measured = exact_period(cfg).period_s / cfg.small_angle_period();
        if (std::abs(measured - ratio) > 1e-13 * ratio) {
            throw NumericError("period ratio depends on L and g at amplitude " + std::to_string(amplitude));
        }
        rows.push_back({amplitude, ratio});
    }
    return rows;
}

} // namespace interlink
