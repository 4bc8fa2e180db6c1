#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace interlink
{

inline constexpr double kStandardGravity = 9.80665;
inline constexpr double kPi = 3.14159265358979323846;

// Rigid pendulum released from rest at amplitude theta0. The bob's mass cancels and is not modelled.
class PendulumConfig
{
public:
    PendulumConfig(double length, double gravity, double amplitude);

    double length() const { return length_; }
    double gravity() const { return gravity_; }
    double amplitude() const { return amplitude_; }
    // 2 pi sqrt(L/g).
    double small_angle_period() const;

private:
    double length_;
    double gravity_;
    double amplitude_;
};

// Length and gravity only, for amplitude sweeps.
class PendulumBase
{
public:
    PendulumBase(double length, double gravity);

    double length() const { return length_; }
    double gravity() const { return gravity_; }
    PendulumConfig with_amplitude(double amplitude) const { return {length_, gravity_, amplitude}; }

private:
    double length_;
    double gravity_;
};

enum class PeriodMethod { closed_form, simulated };

std::string to_string(PeriodMethod method);

struct ClosedFormDetail
{
    double modulus = 0.0;
    // 4 sqrt(L/g) K(k), the reported value.
    double elliptic_form = 0.0;
    // 2 pi sqrt(L/g) / M(1+k, 1-k).
    double agm_form = 0.0;
    // 2 pi sqrt(L/g) 2F1(1/2, 1/2; 1; k^2); absent when the series is too slow near k = 1.
    std::optional<double> hypergeometric_form;
    std::string form_used;
};

struct SimulationDetail
{
    double dt = 0.0;
    std::size_t steps = 0;
    std::size_t crossings = 0;
    double max_energy_drift = 0.0;
};

struct PeriodResult
{
    double period_s = 0.0;
    PeriodMethod method = PeriodMethod::closed_form;
    std::variant<ClosedFormDetail, SimulationDetail> detail;
};

/// T = 4 sqrt(L/g) K(sin(theta0/2)). The AGM and hypergeometric forms are
/// evaluated alongside and must agree to 1e-12 relative, else NumericError.
PeriodResult exact_period(const PendulumConfig& cfg);

/// Integrates theta'' = -(g/L) sin(theta) with fixed-step RK4 from rest at theta0
/// and reads the period off successive zero crossings of theta'.
/// dt must not exceed small_angle_period()/1000.
PeriodResult simulate_period(const PendulumConfig& cfg, double dt);

struct PeriodRatioRow
{
    double amplitude = 0.0;
    // T / T0 = K(sin(theta0/2)) / (pi/2).
    double ratio = 0.0;
};

std::vector<PeriodRatioRow> period_ratio_table(const PendulumBase& base, std::span<const double> amplitudes);

} // namespace interlink
