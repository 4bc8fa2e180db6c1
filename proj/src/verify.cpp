#include "interlink/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "interlink/agm.hpp"
#include "interlink/elliptic.hpp"
#include "interlink/errors.hpp"
#include "interlink/modular.hpp"
#include "interlink/pendulum.hpp"
#include "interlink/theta.hpp"
#include "interlink/zigzag.hpp"

namespace interlink
{

namespace
{

// Accumulates measurements and the first failure for one criterion.
class Recorder
{
public:
    explicit Recorder(CriterionResult& result) : result_(result) {}

    void measure(std::string name, double value) { result_.measurements.emplace_back(std::move(name), value); }

    void expect(bool ok, const std::string& what)
    {
        if (!ok && failures_++ == 0) {
            result_.failure = what;
        }
    }

    bool ok() const { return failures_ == 0; }

private:
    CriterionResult& result_;
    int failures_ = 0;
};

std::string fmt(double value)
{
    std::ostringstream os;
    os.precision(6);
    os << value;
    return os.str();
}

CriterionResult timed(int id, std::string name, std::string provenance, double limit_s,
                      const std::function<void(Recorder&)>& body)
{
    CriterionResult result;
    result.id = id;
    result.name = std::move(name);
    result.provenance = std::move(provenance);
    result.time_limit_s = limit_s;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(rec);
    } catch (const std::exception& e) {
        rec.expect(false, std::string("unexpected error: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.within_time_limit = result.seconds <= limit_s;
    rec.expect(result.within_time_limit, "took " + fmt(result.seconds) + " s, limit " + fmt(limit_s) + " s");
    result.passed = rec.ok();
    return result;
}

GaussSeries maybe_faulty_gauss_series(std::size_t k_max, Fault fault)
{
    auto series = gauss_series(k_max);
    if (fault == Fault::gauss_coefficient && k_max >= 2) {
        series.set_coefficient(2, gauss_coefficient(2) + BigRational(1, 1024));
    }
    return series;
}

std::size_t nonzero_coefficients(const ResidualSeries& r)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i <= std::min(r.residual.order(), r.certified_order); ++i) {
        if (r.residual[i] != 0) {
            ++count;
        }
    }
    return count;
}

bool strictly_decreasing(const std::vector<double>& values)
{
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] < values[i - 1])) {
            return false;
        }
    }
    return true;
}

std::vector<int> modular_radii(Profile profile)
{
    if (profile == Profile::quick) {
        return {25, 50, 100};
    }
    return {100, 200, 400};
}

std::vector<int> wp_radii(Profile profile)
{
    if (profile == Profile::quick) {
        return {50, 100};
    }
    return {100, 200, 400};
}

const Complex kInversionTau(0.3, 1.1);
const Complex kSquareTau(0.0, 1.0);
const Complex kWpPoint(0.3, 0.2);

} // namespace

Profile parse_profile(std::string_view text)
{
    if (text == "quick") {
        return Profile::quick;
    }
    if (text == "full") {
        return Profile::full;
    }
    throw ArgumentError("profile must be quick or full, got '" + std::string(text) + "'");
}

std::string to_string(Profile profile)
{
    return profile == Profile::quick ? "quick" : "full";
}

Fault parse_fault(std::string_view text)
{
    if (text == "none") {
        return Fault::none;
    }
    if (text == "gauss-coefficient") {
        return Fault::gauss_coefficient;
    }
    throw ArgumentError("unknown fault '" + std::string(text) + "'");
}

CriterionResult check_tangent_reproduction(const VerifyOptions&)
{
    return timed(1, "tangent-number reproduction", "tangent numbers T_1..T_13", 1.0, [](Recorder& rec) {
        const std::array<long, 7> expected{1, 2, 16, 272, 7936, 353792, 22368256};
        const auto recurrence = tangent_numbers(13);
        const auto table = zigzag_numbers(13);
        rec.expect(recurrence.size() == expected.size(), "recurrence returned the wrong number of terms");
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < expected.size() && i < recurrence.size(); ++i) {
            const BigCount want(expected[i]);
            if (recurrence[i] != want || table[2 * i + 1] != want) {
                ++mismatches;
                rec.expect(false, "T_" + std::to_string(2 * i + 1) + " = " + to_string(recurrence[i]) + ", expected "
                                      + std::to_string(expected[i]));
            }
        }
        rec.measure("mismatches", static_cast<double>(mismatches));
    });
}

CriterionResult check_zigzag_oracle(const VerifyOptions& options)
{
    const std::size_t n_limit = options.profile == Profile::quick ? 8 : 10;
    return timed(2, "alternating-permutation oracle", "boustrophedon table against direct enumeration", 60.0,
                 [n_limit](Recorder& rec) {
                     const auto table = zigzag_numbers(n_limit);
                     std::size_t mismatches = 0;
                     for (std::size_t n = 0; n <= n_limit; ++n) {
                         const auto walked = enumerate_alternating(n);
                         if (walked != table[n]) {
                             ++mismatches;
                             rec.expect(false, "n = " + std::to_string(n) + ": enumeration " + to_string(walked)
                                                   + " vs table " + to_string(table[n]));
                         }
                     }
                     rec.measure("n_max", static_cast<double>(n_limit));
                     rec.measure("mismatches", static_cast<double>(mismatches));
                     rec.expect(enumerate_alternating(4) == 5, "enumeration at n = 4 is not 5");
                     rec.expect(table[4] == 5, "table at n = 4 is not 5");
                     const auto at8 = enumerate_alternating(8);
                     rec.measure("enumerated_8", at8.get_d());
                     rec.expect(at8 == zigzag_numbers(8)[8], "enumeration at n = 8 disagrees with the table");
                 });
}

CriterionResult check_exact_residuals(const VerifyOptions& options)
{
    const Fault fault = options.fault;
    return timed(3, "exact series residuals", "tangent ODE, AGM ODE and the AGM functional equation", 10.0,
                 [fault](Recorder& rec) {
                     const auto tangent = verify_tangent_ode(40);
                     rec.measure("tangent_ode_nonzero", static_cast<double>(nonzero_coefficients(tangent)));
                     rec.expect(tangent.vanishes() && tangent.certified_order >= 40,
                                "tangent ODE residual is not identically zero through order 40");

                     const auto ode = verify_agm_ode(maybe_faulty_gauss_series(50, fault));
                     rec.measure("agm_ode_nonzero", static_cast<double>(nonzero_coefficients(ode)));
                     rec.expect(ode.vanishes(), "AGM ODE residual is not identically zero at k_max = 50");

                     const auto feq = verify_functional_equation(maybe_faulty_gauss_series(20, fault));
                     rec.measure("functional_equation_nonzero", static_cast<double>(nonzero_coefficients(feq)));
                     rec.expect(feq.vanishes() && feq.certified_order >= 40,
                                "functional-equation residual is not identically zero through order 40");
                 });
}

CriterionResult check_gauss_coefficients(const VerifyOptions& options)
{
    const Fault fault = options.fault;
    return timed(4, "Gauss series coefficients", "A_k = (C(2k,k)/4^k)^2", 1.0, [fault](Recorder& rec) {
        const auto series = maybe_faulty_gauss_series(3, fault);
        const std::array<BigRational, 4> expected{BigRational(1), BigRational(1, 4), BigRational(9, 64),
                                                  BigRational(25, 256)};
        std::size_t mismatches = 0;
        for (std::size_t k = 0; k < expected.size(); ++k) {
            if (series.coefficient(k) != expected[k]) {
                ++mismatches;
                rec.expect(false, "A_" + std::to_string(k) + " = " + to_string(series.coefficient(k)) + ", expected "
                                      + to_string(expected[k]));
            }
        }
        rec.measure("mismatches", static_cast<double>(mismatches));
    });
}

CriterionResult check_elliptic_agreement(const VerifyOptions&)
{
    return timed(5, "three-way K agreement", "K(k) by AGM, hypergeometric series and quadrature", 10.0,
                 [](Recorder& rec) {
                     double worst = 0.0;
                     for (int i = 0; i <= 9; ++i) {
                         const Modulus k(0.1 * i);
                         const double a = ellip_k_agm(k);
                         const double s = ellip_k_series(k);
                         const double q = ellip_k_quadrature(k);
                         const double spread = std::max({std::abs(a - s), std::abs(a - q), std::abs(s - q)});
                         worst = std::max(worst, spread);
                         rec.expect(spread <= 1e-10, "k = " + fmt(k.value()) + ": spread " + fmt(spread));
                     }
                     rec.measure("max_pairwise_difference", worst);

                     const Modulus zero(0.0);
                     double rel0 = 0.0;
                     for (double v : {ellip_k_agm(zero), ellip_k_series(zero), ellip_k_quadrature(zero)}) {
                         rel0 = std::max(rel0, std::abs(v - kHalfPi) / kHalfPi);
                     }
                     rec.measure("k0_relative_error", rel0);
                     rec.expect(rel0 <= 1e-15, "K(0) differs from pi/2 by " + fmt(rel0) + " relative");
                 });
}

CriterionResult check_theta_identities(const VerifyOptions&)
{
    return timed(6, "theta identity suite", "Landen pair, Jacobi quartic, AGM normalization, K bridge", 5.0,
                 [](Recorder& rec) {
                     double worst_identity = 0.0;
                     double worst_bridge = 0.0;
                     for (int i = 1; i <= 10; ++i) {
                         const Nome nome(0.05 * i);
                         const auto r = verify_theta_identities(nome);
                         const double quartic = jacobi_quartic_residual(theta_constants(nome));
                         const double identity
                             = std::max({r.landen, r.geometric_mean, r.agm_normalization, quartic});
                         worst_identity = std::max(worst_identity, identity);
                         worst_bridge = std::max(worst_bridge, r.k_bridge);
                         rec.expect(identity < 1e-12, "q = " + fmt(nome.q()) + ": identity residual " + fmt(identity));
                         rec.expect(r.k_bridge < 1e-10, "q = " + fmt(nome.q()) + ": K bridge residual " + fmt(r.k_bridge));
                     }
                     rec.measure("max_identity_residual", worst_identity);
                     rec.measure("max_k_bridge_residual", worst_bridge);
                 });
}

CriterionResult check_sum_of_squares(const VerifyOptions& options)
{
    const std::size_t n_max = options.profile == Profile::quick ? 50 : 100;
    return timed(7, "sum-of-squares oracle", "theta_3^k coefficients against lattice-point counts", 30.0,
                 [n_max](Recorder& rec) {
                     std::size_t mismatches = 0;
                     for (unsigned k = 2; k <= 4; ++k) {
                         const auto table = sum_of_squares_series(k, n_max);
                         for (std::size_t n = 0; n <= n_max; ++n) {
                             const auto counted = sum_of_squares_bruteforce(k, n);
                             if (counted != table.r[n]) {
                                 ++mismatches;
                                 rec.expect(false, "r_" + std::to_string(k) + "(" + std::to_string(n)
                                                       + "): series " + to_string(table.r[n]) + " vs count "
                                                       + to_string(counted));
                             }
                         }
                     }
                     const auto r2 = sum_of_squares_series(2, 5);
                     const std::array<long, 6> expected{1, 4, 4, 0, 4, 8};
                     for (std::size_t n = 0; n < expected.size(); ++n) {
                         rec.expect(r2.r[n] == expected[n], "r_2(" + std::to_string(n) + ") = " + to_string(r2.r[n]));
                     }
                     rec.measure("n_max", static_cast<double>(n_max));
                     rec.measure("mismatches", static_cast<double>(mismatches));
                 });
}

CriterionResult check_pendulum(const VerifyOptions&)
{
    return timed(8, "pendulum cross-validation", "closed-form period against RK4 simulation", 60.0,
                 [](Recorder& rec) {
                     double worst_error = 0.0;
                     double worst_order = std::numeric_limits<double>::infinity();
                     for (double theta0 : {0.1, 0.5, 1.0, 2.0}) {
                         const PendulumConfig cfg(1.0, kStandardGravity, theta0);
                         const double t0 = cfg.small_angle_period();
                         const double exact = exact_period(cfg).period_s;
                         const double reference = simulate_period(cfg, 1e-5 * t0).period_s;
                         const double rel = std::abs(exact - reference) / exact;
                         worst_error = std::max(worst_error, rel);
                         rec.expect(rel <= 1e-6, "theta0 = " + fmt(theta0) + ": relative error " + fmt(rel));

                         const double coarse = std::abs(simulate_period(cfg, t0 / 1000.0).period_s - exact);
                         const double fine = std::abs(simulate_period(cfg, t0 / 2000.0).period_s - exact);
                         const double order = std::log2(coarse / fine);
                         worst_order = std::min(worst_order, order);
                         rec.expect(order >= 3.5, "theta0 = " + fmt(theta0) + ": observed order " + fmt(order));
                     }
                     rec.measure("max_relative_error", worst_error);
                     rec.measure("min_observed_order", worst_order);

                     const PendulumConfig tiny(1.0, kStandardGravity, 1e-4);
                     const double ratio = exact_period(tiny).period_s / tiny.small_angle_period();
                     rec.measure("small_angle_ratio_minus_one", ratio - 1.0);
                     rec.expect(std::abs(ratio - 1.0) <= 1e-8, "small-angle ratio is off by " + fmt(ratio - 1.0));
                 });
}

CriterionResult check_modular(const VerifyOptions& options)
{
    const auto radii = modular_radii(options.profile);
    const auto wradii = wp_radii(options.profile);
    const int symmetry_radius = 100;
    return timed(
        9, "modular suite", "Eisenstein modularity and the Weierstrass differential equation", 120.0,
        [&](Recorder& rec) {
            const auto g6 = eisenstein(LatticeSpec(kSquareTau, symmetry_radius), 6);
            rec.measure("abs_g6_square", std::abs(g6.value));
            rec.measure("g6_square_tail", g6.tail_bound);
            rec.expect(std::abs(g6.value) < g6.tail_bound, "|G6(i)| exceeds its tail estimate");

            const Complex hex = std::polar(1.0, 2.0 * kPi / 3.0);
            const auto g4 = eisenstein(LatticeSpec(hex, symmetry_radius), 4);
            rec.measure("abs_g4_hexagonal", std::abs(g4.value));
            rec.measure("g4_hexagonal_tail", g4.tail_bound);
            rec.expect(std::abs(g4.value) < g4.tail_bound, "|G4(hexagonal)| exceeds its tail estimate");

            const int translation_radius = options.profile == Profile::quick ? 100 : 200;
            const auto translation
                = verify_modularity(LatticeSpec(kInversionTau, translation_radius), UnimodularMatrix(1, 1, 0, 1), 4);
            rec.measure("translation_residual", translation.residual);
            rec.expect(translation.residual < 1e-10, "translation residual " + fmt(translation.residual));

            std::vector<double> inversion;
            for (int r : radii) {
                inversion.push_back(verify_modularity(LatticeSpec(kInversionTau, r), UnimodularMatrix(0, -1, 1, 0), 4)
                                        .residual);
                rec.measure("inversion_residual_R" + std::to_string(r), inversion.back());
            }
            rec.expect(strictly_decreasing(inversion), "inversion residual does not decrease under R doubling");

            std::vector<double> ode;
            std::vector<double> period;
            for (int r : wradii) {
                const LatticeSpec lattice(kSquareTau, r);
                const WeierstrassInvariants inv(lattice);
                const auto at_z = wp(lattice, inv, kWpPoint);
                const auto shifted = wp(lattice, inv, kWpPoint + 1.0);
                ode.push_back(std::abs(at_z.ode_residual));
                period.push_back(std::abs(shifted.value - at_z.value));
                rec.measure("wp_ode_residual_R" + std::to_string(r), ode.back());
                rec.measure("wp_periodicity_residual_R" + std::to_string(r), period.back());
            }
            rec.expect(strictly_decreasing(ode), "wp ODE residual does not decrease under R doubling");
            rec.expect(strictly_decreasing(period), "wp periodicity residual does not decrease under R doubling");
        });
}

CriterionResult check_truncation_semantics(const VerifyOptions& options)
{
    const auto radii = modular_radii(options.profile);
    return timed(10, "finite-truncation semantics", "modular invariance holds only as R grows without bound", 30.0,
                 [&](Recorder& rec) {
                     // Every finite-R residual must be explained by the truncation tail it reports,
                     // and that tail must shrink toward zero.
                     std::vector<double> bounds;
                     for (int r : radii) {
                         const auto m
                             = verify_modularity(LatticeSpec(kInversionTau, r), UnimodularMatrix(0, -1, 1, 0), 4);
                         bounds.push_back(m.bound);
                         rec.measure("inversion_bound_R" + std::to_string(r), m.bound);
                         rec.expect(m.residual <= m.bound, "R = " + std::to_string(r) + ": residual " + fmt(m.residual)
                                                               + " exceeds bound " + fmt(m.bound));
                     }
                     rec.expect(strictly_decreasing(bounds), "inversion tail bound does not shrink with R");

                     const int r = radii.back();
                     const auto low = eisenstein(LatticeSpec(kInversionTau, r), 4);
                     const auto high = eisenstein(LatticeSpec(kInversionTau, 2 * r), 4);
                     const double change = std::abs(high.value - low.value);
                     rec.measure("doubling_change_R" + std::to_string(r), change);
                     rec.expect(change <= low.tail_bound, "doubling R changed G4 by more than the tail estimate");
                 });
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options)
{
    return {
        check_tangent_reproduction(options), check_zigzag_oracle(options),    check_exact_residuals(options),
        check_gauss_coefficients(options),   check_elliptic_agreement(options), check_theta_identities(options),
        check_sum_of_squares(options),       check_pendulum(options),         check_modular(options),
        check_truncation_semantics(options),
    };
}

} // namespace interlink
