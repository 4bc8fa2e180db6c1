#include "interlink/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "interlink/agm.hpp"
#include "interlink/elliptic.hpp"
#include "interlink/errors.hpp"
#include "interlink/modular.hpp"
#include "interlink/pendulum.hpp"
#include "interlink/record.hpp"
#include "interlink/theta.hpp"
#include "interlink/verify.hpp"
#include "interlink/zigzag.hpp"

namespace interlink
{

namespace
{

constexpr double kEllipticAgreementBound = 1e-10;
constexpr double kThetaIdentityBound = 1e-12;
constexpr double kThetaBridgeBound = 1e-10;
constexpr std::size_t kDefaultOracleMax = 100;

enum class Format { json, csv };

Format parse_format(const std::string& text)
{
    if (text == "json") {
        return Format::json;
    }
    if (text == "csv") {
        return Format::csv;
    }
    throw ArgumentError("format must be json or csv, got '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string current;
    for (const char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

double parse_real(const std::string& text, const std::string& what)
{
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw ArgumentError(what + ": '" + text + "' is not a number");
    }
    return value;
}

long parse_integer(const std::string& text, const std::string& what)
{
    long value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw ArgumentError(what + ": '" + text + "' is not an integer");
    }
    return value;
}

Complex parse_complex(const std::string& text, const std::string& what)
{
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw ArgumentError(what + " must be written RE,IM");
    }
    return {parse_real(parts[0], what), parse_real(parts[1], what)};
}

std::vector<double> parse_reals(const std::string& text, const std::string& what)
{
    std::vector<double> values;
    for (const auto& part : split(text, ',')) {
        values.push_back(parse_real(part, what));
    }
    return values;
}

template <typename T>
Value::Array to_array(const std::vector<T>& items)
{
    Value::Array out;
    out.reserve(items.size());
    for (const auto& item : items) {
        out.emplace_back(item);
    }
    return out;
}

void emit(std::ostream& out, const OutputRecord& record)
{
    write_jsonl(out, record);
}

std::size_t largest_odd_at_most(std::size_t n)
{
    return n % 2 == 1 ? n : n - 1;
}

// zigzag

struct ZigzagArgs
{
    std::size_t n_max = 13;
    bool check_oracle = false;
    std::size_t enumerate_max = kDefaultEnumerationLimit;
    std::string format = "json";
};

int run_zigzag(const ZigzagArgs& a, std::ostream& out)
{
    const Format format = parse_format(a.format);
    if (a.enumerate_max > kEnumerationLimit) {
        throw ResourceLimitError("--enumerate-max is limited to " + std::to_string(kEnumerationLimit));
    }
    const auto table = zigzag_numbers(a.n_max);

    OutputRecord rec;
    rec.command = "zigzag";
    rec.provenance = "alternating permutations: Seidel boustrophedon table, tangent-number recurrence";
    rec.inputs["n_max"] = a.n_max;
    rec.inputs["check_oracle"] = a.check_oracle;
    rec.outputs["counts"] = to_array(table.counts);

    std::size_t failures = 0;
    if (a.n_max >= 1) {
        const std::size_t top = std::min(largest_odd_at_most(a.n_max), kTangentLimit);
        const auto tangents = tangent_numbers(top);
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < tangents.size(); ++i) {
            if (tangents[i] != table[2 * i + 1]) {
                ++mismatches;
            }
        }
        rec.outputs["tangent_numbers"] = to_array(tangents);
        rec.residuals["recurrence_mismatches"] = mismatches;
        failures += mismatches;
    }

    std::vector<BigCount> walked;
    if (a.check_oracle) {
        rec.inputs["enumerate_max"] = a.enumerate_max;
        const std::size_t top = std::min(a.n_max, a.enumerate_max);
        std::size_t mismatches = 0;
        for (std::size_t n = 0; n <= top; ++n) {
            walked.push_back(enumerate_alternating(n));
            if (walked.back() != table[n]) {
                ++mismatches;
            }
        }
        rec.outputs["enumerated"] = to_array(walked);
        rec.residuals["oracle_mismatches"] = mismatches;
        failures += mismatches;
    }

    if (format == Format::csv) {
        Table t;
        t.header = {"n", "count"};
        if (a.check_oracle) {
            t.header.emplace_back("enumerated");
        }
        for (std::size_t n = 0; n <= a.n_max; ++n) {
            std::vector<Value> row{Value(n), Value(table[n])};
            if (a.check_oracle) {
                row.push_back(n < walked.size() ? Value(walked[n]) : Value());
            }
            t.rows.push_back(std::move(row));
        }
        write_csv(out, t);
    } else {
        emit(out, rec);
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

// agm

struct AgmArgs
{
    double a = 0.0;
    double b = 0.0;
    double tol = kDefaultAgmTolerance;
    bool trace = false;
    std::size_t k_max = 10;
    std::vector<double> x;
};

int run_agm(const AgmArgs& args, bool have_a, bool have_b, std::ostream& out)
{
    if (!have_a || !have_b) {
        throw ArgumentError("agm needs both --a and --b");
    }
    const auto r = agm(args.a, args.b, args.tol);
    OutputRecord rec;
    rec.command = "agm";
    rec.provenance = "arithmetic-geometric mean iteration";
    rec.inputs["a"] = args.a;
    rec.inputs["b"] = args.b;
    rec.inputs["tol"] = args.tol;
    rec.outputs["limit"] = r.limit;
    rec.outputs["iterations"] = r.iterations;
    if (args.trace) {
        Value::Array steps;
        for (const auto& s : r.trace) {
            steps.emplace_back(Value::Array{Value(s.a), Value(s.b)});
        }
        rec.outputs["trace"] = std::move(steps);
    }
    const auto& last = r.trace.back();
    rec.residuals["final_relative_gap"] = last.a > 0.0 ? (last.a - last.b) / last.a : 0.0;
    emit(out, rec);
    return kExitOk;
}

int run_agm_series(const AgmArgs& args, std::ostream& out)
{
    const auto series = gauss_series(args.k_max);
    OutputRecord rec;
    rec.command = "agm series";
    rec.provenance = "Gauss series 1/M(1+x, 1-x) = sum A_k x^(2k)";
    rec.inputs["k_max"] = args.k_max;
    Value::Array coeffs;
    for (std::size_t k = 0; k <= series.k_max(); ++k) {
        coeffs.emplace_back(series.coefficient(k));
    }
    rec.outputs["coefficients"] = std::move(coeffs);
    if (!args.x.empty()) {
        rec.inputs["x"] = to_array(args.x);
        Value::Array sums;
        Value::Array gaps;
        for (double x : args.x) {
            if (!(std::abs(x) < 1.0)) {
                throw RangeError("series points must satisfy |x| < 1");
            }
            const double partial = series.partial_sum(x);
            sums.emplace_back(partial);
            gaps.emplace_back(std::abs(partial - 1.0 / agm(1.0 + x, 1.0 - x).limit));
        }
        rec.outputs["partial_sums"] = std::move(sums);
        rec.residuals["partial_sum_vs_agm"] = std::move(gaps);
    }
    emit(out, rec);
    return kExitOk;
}

int emit_residual_series(const std::string& command, const std::string& provenance, std::size_t k_max,
                         const ResidualSeries& r, std::ostream& out)
{
    OutputRecord rec;
    rec.command = command;
    rec.provenance = provenance;
    rec.inputs["k_max"] = k_max;
    rec.outputs["certified_order"] = r.certified_order;
    Value::Array coeffs;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i <= r.certified_order && i <= r.residual.order(); ++i) {
        coeffs.emplace_back(r.residual[i]);
        if (r.residual[i] != 0) {
            ++nonzero;
        }
    }
    rec.outputs["residual_coefficients"] = std::move(coeffs);
    rec.outputs["vanishes"] = r.vanishes();
    rec.residuals["nonzero_certified_coefficients"] = nonzero;
    emit(out, rec);
    return r.vanishes() ? kExitOk : kExitVerification;
}

// ellipk / hyp2f1

struct EllipkArgs
{
    double k = 0.0;
    std::string method = "all";
    double tol = kDefaultQuadratureTolerance;
};

int run_ellipk(const EllipkArgs& args, std::ostream& out)
{
    const Modulus k(args.k);
    const std::string& m = args.method;
    if (m != "agm" && m != "series" && m != "quadrature" && m != "all") {
        throw ArgumentError("method must be agm, series, quadrature or all, got '" + m + "'");
    }
    OutputRecord rec;
    rec.command = "ellipk";
    rec.provenance = "complete elliptic integral K(k) = (pi/2) / M(1, sqrt(1-k^2)) = (pi/2) 2F1(1/2, 1/2; 1; k^2)";
    rec.inputs["k"] = args.k;
    rec.inputs["method"] = m;

    std::vector<std::pair<std::string, double>> values;
    if (m == "agm" || m == "all") {
        values.emplace_back("agm", ellip_k_agm(k));
    }
    if (m == "series" || (m == "all" && k.value() <= kSeriesModulusLimit)) {
        values.emplace_back("series", ellip_k_series(k));
    }
    if (m == "quadrature" || m == "all") {
        rec.inputs["quadrature_tol"] = args.tol;
        values.emplace_back("quadrature", ellip_k_quadrature(k, args.tol));
    }
    for (const auto& [name, v] : values) {
        rec.outputs[name] = v;
    }
    if (m == "all" && k.value() > kSeriesModulusLimit) {
        rec.outputs["series"] = "skipped: k above series limit";
    }

    bool ok = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const double delta = std::abs(values[i].second - values[j].second);
            rec.residuals["delta_" + values[i].first + "_" + values[j].first] = delta;
            ok = ok && delta <= kEllipticAgreementBound;
        }
    }
    if (values.size() > 1) {
        rec.residuals["bound"] = kEllipticAgreementBound;
    }
    emit(out, rec);
    return ok ? kExitOk : kExitVerification;
}

struct HypArgs
{
    double alpha = 0.5;
    double beta = 0.5;
    double gamma = 1.0;
    double x = 0.0;
    std::size_t terms = 100;
};

int run_hyp2f1(const HypArgs& args, std::ostream& out)
{
    const auto r = hypergeom_2f1(HypergeomParams(args.alpha, args.beta, args.gamma, args.x, args.terms));
    OutputRecord rec;
    rec.command = "hyp2f1";
    rec.provenance = "Gauss hypergeometric series 2F1(alpha, beta; gamma; x)";
    rec.inputs["alpha"] = args.alpha;
    rec.inputs["beta"] = args.beta;
    rec.inputs["gamma"] = args.gamma;
    rec.inputs["x"] = args.x;
    rec.inputs["terms"] = args.terms;
    rec.outputs["value"] = r.value;
    rec.outputs["terms_used"] = r.terms;
    rec.residuals["last_term"] = r.last_term;
    emit(out, rec);
    return kExitOk;
}

// theta / rk

struct ThetaArgs
{
    double q = 0.1;
    double tail_tol = kDefaultTailTolerance;
};

int run_theta(const ThetaArgs& args, std::ostream& out)
{
    const Nome nome(args.q, args.tail_tol);
    const auto t = theta_constants(nome);
    OutputRecord rec;
    rec.command = "theta";
    rec.provenance = "Jacobi theta constants theta_2, theta_3, theta_4 at real nome q";
    rec.inputs["q"] = args.q;
    rec.inputs["tail_tol"] = args.tail_tol;
    rec.outputs["theta2"] = t.theta2;
    rec.outputs["theta3"] = t.theta3;
    rec.outputs["theta4"] = t.theta4;
    rec.outputs["terms_used"] = t.terms_used;
    rec.residuals["jacobi_quartic_relative"] = jacobi_quartic_residual(t);
    emit(out, rec);
    return kExitOk;
}

int run_theta_verify(const ThetaArgs& args, std::ostream& out)
{
    const Nome nome(args.q, args.tail_tol);
    const auto r = verify_theta_identities(nome);
    const double quartic = jacobi_quartic_residual(theta_constants(nome));
    OutputRecord rec;
    rec.command = "theta verify";
    rec.provenance = "Landen pair, Jacobi quartic, AGM normalization and the theta/K bridge";
    rec.inputs["q"] = args.q;
    rec.inputs["tail_tol"] = args.tail_tol;
    rec.residuals["landen"] = r.landen;
    rec.residuals["geometric_mean"] = r.geometric_mean;
    rec.residuals["agm_normalization"] = r.agm_normalization;
    rec.residuals["jacobi_quartic_relative"] = quartic;
    rec.residuals["k_bridge"] = r.k_bridge;
    rec.residuals["identity_bound"] = kThetaIdentityBound;
    rec.residuals["k_bridge_bound"] = kThetaBridgeBound;
    const bool ok = std::max({r.landen, r.geometric_mean, r.agm_normalization, quartic}) < kThetaIdentityBound
                    && r.k_bridge < kThetaBridgeBound;
    rec.outputs["passed"] = ok;
    emit(out, rec);
    return ok ? kExitOk : kExitVerification;
}

struct RkArgs
{
    unsigned k = 2;
    std::size_t n_max = 10;
    bool check_oracle = false;
    std::size_t oracle_max = kDefaultOracleMax;
    std::string format = "json";
};

int run_rk(const RkArgs& args, std::ostream& out)
{
    const Format format = parse_format(args.format);
    const auto table = sum_of_squares_series(args.k, args.n_max);
    OutputRecord rec;
    rec.command = "rk";
    rec.provenance = "sums of squares r_k(n) as coefficients of theta_3(q)^k";
    rec.inputs["k"] = args.k;
    rec.inputs["n_max"] = args.n_max;
    rec.inputs["check_oracle"] = args.check_oracle;
    rec.outputs["r"] = to_array(table.r);

    std::vector<BigCount> counted;
    std::size_t mismatches = 0;
    if (args.check_oracle) {
        if (args.k > kBruteForceMaxK) {
            throw ResourceLimitError("the lattice-point oracle supports k <= " + std::to_string(kBruteForceMaxK));
        }
        if (args.oracle_max > kBruteForceMaxN) {
            throw ResourceLimitError("--oracle-max is limited to " + std::to_string(kBruteForceMaxN));
        }
        rec.inputs["oracle_max"] = args.oracle_max;
        const std::size_t top = std::min(args.n_max, args.oracle_max);
        for (std::size_t n = 0; n <= top; ++n) {
            counted.push_back(sum_of_squares_bruteforce(args.k, n));
            if (counted.back() != table.r[n]) {
                ++mismatches;
            }
        }
        rec.outputs["counted"] = to_array(counted);
        rec.residuals["oracle_mismatches"] = mismatches;
    }

    if (format == Format::csv) {
        Table t;
        t.header = {"n", "r"};
        if (args.check_oracle) {
            t.header.emplace_back("counted");
        }
        for (std::size_t n = 0; n <= args.n_max; ++n) {
            std::vector<Value> row{Value(n), Value(table.r[n])};
            if (args.check_oracle) {
                row.push_back(n < counted.size() ? Value(counted[n]) : Value());
            }
            t.rows.push_back(std::move(row));
        }
        write_csv(out, t);
    } else {
        emit(out, rec);
    }
    return mismatches == 0 ? kExitOk : kExitVerification;
}

// pendulum

struct PendulumArgs
{
    double length = 1.0;
    double gravity = kStandardGravity;
    double amplitude = 0.0;
    std::string method = "exact";
    double dt = 0.0;
    std::string amplitudes;
    std::string format = "json";
};

// Cross-check tolerance; near-separatrix swings are slower to resolve.
double pendulum_bound(double amplitude)
{
    return amplitude <= 2.0 ? 1e-6 : 1e-5;
}

int run_pendulum(const PendulumArgs& args, bool have_amplitude, std::ostream& out)
{
    if (!have_amplitude) {
        throw ArgumentError("pendulum needs --amplitude");
    }
    const std::string& m = args.method;
    if (m != "exact" && m != "simulate" && m != "both") {
        throw ArgumentError("method must be exact, simulate or both, got '" + m + "'");
    }
    const PendulumConfig cfg(args.length, args.gravity, args.amplitude);
    const double t0 = cfg.small_angle_period();

    OutputRecord rec;
    rec.command = "pendulum";
    rec.provenance = "pendulum period T = 4 sqrt(L/g) K(sin(theta0/2)) against energy-conserving simulation";
    rec.inputs["length"] = args.length;
    rec.inputs["gravity"] = args.gravity;
    rec.inputs["amplitude"] = args.amplitude;
    rec.inputs["method"] = m;
    rec.outputs["small_angle_period_s"] = t0;

    double exact = 0.0;
    double simulated = 0.0;
    if (m == "exact" || m == "both") {
        const auto r = exact_period(cfg);
        const auto& d = std::get<ClosedFormDetail>(r.detail);
        exact = r.period_s;
        rec.outputs["period_s"] = r.period_s;
        rec.outputs["ratio"] = r.period_s / t0;
        rec.outputs["modulus"] = d.modulus;
        rec.outputs["elliptic_form_s"] = d.elliptic_form;
        rec.outputs["agm_form_s"] = d.agm_form;
        if (d.hypergeometric_form) {
            rec.outputs["hypergeometric_form_s"] = *d.hypergeometric_form;
        }
    }
    if (m == "simulate" || m == "both") {
        const double dt = args.dt > 0.0 ? args.dt : 1e-5 * t0;
        rec.inputs["dt"] = dt;
        const auto r = simulate_period(cfg, dt);
        const auto& d = std::get<SimulationDetail>(r.detail);
        simulated = r.period_s;
        rec.outputs["simulated_period_s"] = r.period_s;
        rec.outputs["steps"] = d.steps;
        rec.outputs["crossings"] = d.crossings;
        rec.residuals["max_energy_drift"] = d.max_energy_drift;
    }
    bool ok = true;
    if (m == "both") {
        const double rel = std::abs(exact - simulated) / exact;
        rec.residuals["relative_difference"] = rel;
        rec.residuals["bound"] = pendulum_bound(args.amplitude);
        ok = rel <= pendulum_bound(args.amplitude);
    }
    emit(out, rec);
    return ok ? kExitOk : kExitVerification;
}

int run_pendulum_sweep(const PendulumArgs& args, std::ostream& out)
{
    const Format format = parse_format(args.format);
    if (args.amplitudes.empty()) {
        throw ArgumentError("sweep needs --amplitudes a,b,c");
    }
    const auto amplitudes = parse_reals(args.amplitudes, "--amplitudes");
    const PendulumBase base(args.length, args.gravity);
    const auto rows = period_ratio_table(base, amplitudes);
    const double t0 = base.with_amplitude(amplitudes.front()).small_angle_period();

    if (format == Format::csv) {
        Table t;
        t.header = {"amplitude", "ratio", "period_s"};
        for (const auto& row : rows) {
            t.rows.push_back({Value(row.amplitude), Value(row.ratio), Value(row.ratio * t0)});
        }
        write_csv(out, t);
        return kExitOk;
    }
    OutputRecord rec;
    rec.command = "pendulum sweep";
    rec.provenance = "period amplification T/T0 = K(sin(theta0/2)) / (pi/2)";
    rec.inputs["length"] = args.length;
    rec.inputs["gravity"] = args.gravity;
    rec.inputs["amplitudes"] = to_array(amplitudes);
    rec.outputs["small_angle_period_s"] = t0;
    Value::Array table;
    for (const auto& row : rows) {
        table.emplace_back(Value::Object{
            {"amplitude", Value(row.amplitude)}, {"ratio", Value(row.ratio)}, {"period_s", Value(row.ratio * t0)}});
    }
    rec.outputs["rows"] = std::move(table);
    emit(out, rec);
    return kExitOk;
}

// eisenstein / wp

struct LatticeArgs
{
    std::string tau = "0,1";
    int weight = 4;
    int radius = 100;
    std::string gamma;
    std::string z;
    bool check_ode = false;
};

int run_eisenstein(const LatticeArgs& args, std::ostream& out)
{
    const LatticeSpec lattice(parse_complex(args.tau, "--tau"), args.radius);
    const auto g = eisenstein(lattice, args.weight);
    OutputRecord rec;
    rec.command = "eisenstein";
    rec.provenance = "Eisenstein series G_2k as a lattice sum over the disk |omega| <= R";
    rec.inputs["tau"] = lattice.tau();
    rec.inputs["weight"] = args.weight;
    rec.inputs["radius"] = args.radius;
    rec.outputs["value"] = g.value;
    rec.outputs["abs"] = std::abs(g.value);
    rec.residuals["tail_bound"] = g.tail_bound;
    emit(out, rec);
    return kExitOk;
}

int run_eisenstein_verify(const LatticeArgs& args, std::ostream& out)
{
    if (args.gamma.empty()) {
        throw ArgumentError("verify needs --gamma a,b,c,d");
    }
    const auto parts = split(args.gamma, ',');
    if (parts.size() != 4) {
        throw ArgumentError("--gamma must be written a,b,c,d");
    }
    const UnimodularMatrix gamma(parse_integer(parts[0], "--gamma"), parse_integer(parts[1], "--gamma"),
                                 parse_integer(parts[2], "--gamma"), parse_integer(parts[3], "--gamma"));
    const LatticeSpec lattice(parse_complex(args.tau, "--tau"), args.radius);
    const auto m = verify_modularity(lattice, gamma, args.weight);
    OutputRecord rec;
    rec.command = "eisenstein verify";
    rec.provenance = "modularity G_2k(gamma tau) = (c tau + d)^(2k) G_2k(tau)";
    rec.inputs["tau"] = lattice.tau();
    rec.inputs["weight"] = args.weight;
    rec.inputs["radius"] = args.radius;
    rec.inputs["gamma"] = Value::Array{Value(gamma.a()), Value(gamma.b()), Value(gamma.c()), Value(gamma.d())};
    rec.outputs["transformed_tau"] = m.transformed_tau;
    rec.residuals["residual"] = m.residual;
    rec.residuals["bound"] = m.bound;
    const bool ok = m.residual <= m.bound;
    rec.outputs["within_bound"] = ok;
    emit(out, rec);
    return ok ? kExitOk : kExitVerification;
}

int run_wp(const LatticeArgs& args, std::ostream& out)
{
    if (args.z.empty()) {
        throw ArgumentError("wp needs --z RE,IM");
    }
    const LatticeSpec lattice(parse_complex(args.tau, "--tau"), args.radius);
    const Complex z = parse_complex(args.z, "--z");
    const WeierstrassInvariants inv(lattice);
    const auto p = wp(lattice, inv, z);
    OutputRecord rec;
    rec.command = "wp";
    rec.provenance = "Weierstrass wp and wp' as truncated lattice sums, with g2 = 60 G4, g3 = 140 G6";
    rec.inputs["tau"] = lattice.tau();
    rec.inputs["z"] = z;
    rec.inputs["radius"] = args.radius;
    rec.inputs["check_ode"] = args.check_ode;
    rec.outputs["wp"] = p.value;
    rec.outputs["wp_prime"] = p.derivative;
    rec.outputs["g2"] = inv.g2();
    rec.outputs["g3"] = inv.g3();
    if (args.check_ode) {
        rec.residuals["ode_residual"] = p.ode_residual;
        rec.residuals["ode_residual_abs"] = std::abs(p.ode_residual);
    }
    emit(out, rec);
    return kExitOk;
}

// verify-all

struct VerifyArgs
{
    std::string profile = "full";
    std::string fault = "none";
    bool timing = false;
};

int run_verify_all(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    VerifyOptions options;
    options.profile = parse_profile(args.profile);
    options.fault = parse_fault(args.fault);
    const auto results = run_acceptance(options);

    Value::Array failed;
    for (const auto& r : results) {
        OutputRecord rec;
        rec.command = "verify-all";
        rec.provenance = r.provenance;
        rec.inputs["profile"] = to_string(options.profile);
        rec.inputs["criterion"] = r.id;
        rec.inputs["name"] = r.name;
        if (options.fault != Fault::none) {
            rec.inputs["fault"] = args.fault;
        }
        rec.outputs["passed"] = r.passed;
        rec.outputs["time_limit_s"] = r.time_limit_s;
        rec.outputs["within_time_limit"] = r.within_time_limit;
        if (args.timing) {
            rec.outputs["seconds"] = r.seconds;
        }
        if (!r.failure.empty()) {
            rec.outputs["failure"] = r.failure;
        }
        for (const auto& [name, value] : r.measurements) {
            rec.residuals[name] = value;
        }
        emit(out, rec);
        if (!r.passed) {
            failed.emplace_back(r.id);
            err << "criterion " << r.id << " (" << r.name << ") failed: " << r.failure << '\n';
        }
    }

    OutputRecord summary;
    summary.command = "verify-all summary";
    summary.provenance = "aggregate of the acceptance criteria";
    summary.inputs["profile"] = to_string(options.profile);
    if (options.fault != Fault::none) {
        summary.inputs["fault"] = args.fault;
    }
    summary.outputs["criteria"] = results.size();
    summary.outputs["passed"] = results.size() - failed.size();
    summary.outputs["failed"] = failed;
    emit(out, summary);
    return failed.empty() ? kExitOk : kExitVerification;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and numerical checks linking zigzag numbers, the AGM, elliptic integrals, theta "
                 "functions, the pendulum and modular forms.",
                 "interlink"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    ZigzagArgs zz;
    auto* zigzag = app.add_subcommand("zigzag", "Alternating-permutation counts T_0..T_n");
    zigzag->add_option("--n-max", zz.n_max, "Largest n (<= 500)")->capture_default_str();
    zigzag->add_flag("--check-oracle", zz.check_oracle, "Compare against direct enumeration");
    zigzag->add_option("--enumerate-max", zz.enumerate_max, "Largest n to enumerate (<= 12)")->capture_default_str();
    zigzag->add_option("--format", zz.format, "json or csv")->capture_default_str();

    AgmArgs ag;
    auto* agm_cmd = app.add_subcommand("agm", "Arithmetic-geometric mean and its Gauss series");
    agm_cmd->require_subcommand(0, 1);
    auto* opt_a = agm_cmd->add_option("--a", ag.a, "First argument");
    auto* opt_b = agm_cmd->add_option("--b", ag.b, "Second argument");
    agm_cmd->add_option("--tol", ag.tol, "Relative stopping tolerance")->capture_default_str();
    agm_cmd->add_flag("--trace", ag.trace, "Emit every (a_n, b_n) pair");
    auto* agm_series = agm_cmd->add_subcommand("series", "Exact coefficients A_0..A_K");
    agm_series->add_option("--k-max", ag.k_max, "Largest k (<= 200)")->capture_default_str();
    agm_series->add_option("--x", ag.x, "Points |x| < 1 for partial sums")->delimiter(',');
    auto* agm_ode = agm_cmd->add_subcommand("verify-ode", "Exact residual of the AGM differential equation");
    agm_ode->add_option("--k-max", ag.k_max, "Largest k (<= 100)")->capture_default_str();
    auto* agm_feq = agm_cmd->add_subcommand("verify-feq", "Exact residual of the AGM functional equation");
    agm_feq->add_option("--k-max", ag.k_max, "Largest k (<= 60)")->capture_default_str();

    EllipkArgs ek;
    auto* ellipk = app.add_subcommand("ellipk", "Complete elliptic integral K(k)");
    ellipk->add_option("--k", ek.k, "Modulus in [0, 1)")->required();
    ellipk->add_option("--method", ek.method, "agm, series, quadrature or all")->capture_default_str();
    ellipk->add_option("--tol", ek.tol, "Quadrature absolute tolerance")->capture_default_str();

    HypArgs hy;
    auto* hyp = app.add_subcommand("hyp2f1", "Gauss hypergeometric series");
    hyp->add_option("--alpha", hy.alpha)->capture_default_str();
    hyp->add_option("--beta", hy.beta)->capture_default_str();
    hyp->add_option("--gamma", hy.gamma)->capture_default_str();
    hyp->add_option("--x", hy.x, "|x| < 1")->required();
    hyp->add_option("--terms", hy.terms, "Maximum number of terms")->capture_default_str();

    ThetaArgs th;
    auto* theta = app.add_subcommand("theta", "Theta constants at a real nome");
    theta->require_subcommand(0, 1);
    theta->add_option("--q", th.q, "Nome in [0, 1)")->capture_default_str();
    theta->add_option("--tail-tol", th.tail_tol, "Truncation tail tolerance")->capture_default_str();
    auto* theta_verify = theta->add_subcommand("verify", "Residuals of the theta/AGM identities");
    theta_verify->fallthrough();

    RkArgs rk;
    auto* rk_cmd = app.add_subcommand("rk", "Sums of squares r_k(n)");
    rk_cmd->add_option("--k", rk.k, "Number of squares (1..8)")->required();
    rk_cmd->add_option("--n-max", rk.n_max, "Largest n (<= 10000)")->required();
    rk_cmd->add_flag("--check-oracle", rk.check_oracle, "Compare against lattice-point counts (k <= 4)");
    rk_cmd->add_option("--oracle-max", rk.oracle_max, "Largest n to count (<= 500)")->capture_default_str();
    rk_cmd->add_option("--format", rk.format, "json or csv")->capture_default_str();

    PendulumArgs pe;
    auto* pendulum = app.add_subcommand("pendulum", "Pendulum period, closed form and simulated");
    pendulum->require_subcommand(0, 1);
    pendulum->add_option("--length", pe.length, "Length in metres")->capture_default_str();
    pendulum->add_option("--gravity", pe.gravity, "Gravitational acceleration in m/s^2")->capture_default_str();
    auto* opt_amp = pendulum->add_option("--amplitude", pe.amplitude, "Release angle in radians, (0, pi)");
    pendulum->add_option("--method", pe.method, "exact, simulate or both")->capture_default_str();
    pendulum->add_option("--dt", pe.dt, "RK4 step in seconds (default 1e-5 T0)");
    auto* sweep = pendulum->add_subcommand("sweep", "Period amplification over several amplitudes");
    sweep->fallthrough();
    sweep->add_option("--amplitudes", pe.amplitudes, "Comma-separated radians")->required();
    sweep->add_option("--format", pe.format, "json or csv")->capture_default_str();

    LatticeArgs la;
    auto* eis = app.add_subcommand("eisenstein", "Eisenstein series G_2k of Z tau + Z");
    eis->require_subcommand(0, 1);
    eis->add_option("--tau", la.tau, "RE,IM with IM > 0")->capture_default_str();
    eis->add_option("--weight", la.weight, "2k in {4, 6, 8, 10, 12}")->capture_default_str();
    eis->add_option("--radius", la.radius, "Truncation radius R >= 10")->capture_default_str();
    auto* eis_verify = eis->add_subcommand("verify", "Modularity residual under a unimodular matrix");
    eis_verify->fallthrough();
    eis_verify->add_option("--gamma", la.gamma, "a,b,c,d with ad - bc = 1")->required();

    auto* wp_cmd = app.add_subcommand("wp", "Weierstrass wp and wp'");
    wp_cmd->add_option("--tau", la.tau, "RE,IM with IM > 0")->capture_default_str();
    wp_cmd->add_option("--z", la.z, "RE,IM away from the lattice")->required();
    wp_cmd->add_option("--radius", la.radius, "Truncation radius R >= 50")->capture_default_str();
    wp_cmd->add_flag("--check-ode", la.check_ode, "Report (wp')^2 - (4 wp^3 - g2 wp - g3)");

    VerifyArgs va;
    auto* verify_all = app.add_subcommand("verify-all", "Run every acceptance criterion");
    verify_all->add_option("--profile", va.profile, "quick or full")->envname("INTERLINK_PROFILE")->capture_default_str();
    verify_all->add_option("--inject-fault", va.fault)->group("");
    verify_all->add_flag("--timing", va.timing, "Include wall-clock seconds (breaks byte-for-byte determinism)");

    if (args.size() > 1 && !args[1].empty() && args[1][0] != '-') {
        const auto known = app.get_subcommands([&](const CLI::App* sub) { return sub->check_name(args[1]); });
        if (known.empty()) {
            err << "error: unknown subcommand '" << args[1] << "'\n\n" << app.help();
            return kExitUsage;
        }
    }

    // CLI11 consumes its argument vector from the back and without the program name.
    std::vector<std::string> reversed;
    for (std::size_t i = args.size(); i-- > 1;) {
        reversed.push_back(args[i]);
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (zigzag->parsed()) {
            return run_zigzag(zz, out);
        }
        if (agm_cmd->parsed()) {
            if (agm_series->parsed()) {
                return run_agm_series(ag, out);
            }
            if (agm_ode->parsed()) {
                return emit_residual_series("agm verify-ode", "differential equation of 1/M(1+x, 1-x)", ag.k_max,
                                            verify_agm_ode(ag.k_max), out);
            }
            if (agm_feq->parsed()) {
                return emit_residual_series("agm verify-feq",
                                            "functional equation of 1/M(1+x, 1-x) under x -> 2t/(1+t^2)", ag.k_max,
                                            verify_functional_equation(ag.k_max), out);
            }
            return run_agm(ag, opt_a->count() > 0, opt_b->count() > 0, out);
        }
        if (ellipk->parsed()) {
            return run_ellipk(ek, out);
        }
        if (hyp->parsed()) {
            return run_hyp2f1(hy, out);
        }
        if (theta->parsed()) {
            return theta_verify->parsed() ? run_theta_verify(th, out) : run_theta(th, out);
        }
        if (rk_cmd->parsed()) {
            return run_rk(rk, out);
        }
        if (pendulum->parsed()) {
            return sweep->parsed() ? run_pendulum_sweep(pe, out) : run_pendulum(pe, opt_amp->count() > 0, out);
        }
        if (eis->parsed()) {
            return eis_verify->parsed() ? run_eisenstein_verify(la, out) : run_eisenstein(la, out);
        }
        if (wp_cmd->parsed()) {
            return run_wp(la, out);
        }
        if (verify_all->parsed()) {
            return run_verify_all(va, out, err);
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace interlink
