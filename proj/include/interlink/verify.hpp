#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace interlink
{

// quick caps oracle sizes (enumeration n <= 8, r_k n <= 50, lattice radius <= 100).
enum class Profile { quick, full };

// Deliberate corruption used to prove the checks can fail.
enum class Fault { none, gauss_coefficient };

Profile parse_profile(std::string_view text);
std::string to_string(Profile profile);
Fault parse_fault(std::string_view text);

struct VerifyOptions
{
    Profile profile = Profile::full;
    Fault fault = Fault::none;
};

struct CriterionResult
{
    int id = 0;
    std::string name;
    std::string provenance;
    bool passed = false;
    bool within_time_limit = true;
    double seconds = 0.0;
    double time_limit_s = 0.0;
    // Named measurements in the order they were taken.
    std::vector<std::pair<std::string, double>> measurements;
    // Human-readable explanation of the first failure, empty on success.
    std::string failure;
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

CriterionResult check_tangent_reproduction(const VerifyOptions& options);
CriterionResult check_zigzag_oracle(const VerifyOptions& options);
CriterionResult check_exact_residuals(const VerifyOptions& options);
CriterionResult check_gauss_coefficients(const VerifyOptions& options);
CriterionResult check_elliptic_agreement(const VerifyOptions& options);
CriterionResult check_theta_identities(const VerifyOptions& options);
CriterionResult check_sum_of_squares(const VerifyOptions& options);
CriterionResult check_pendulum(const VerifyOptions& options);
CriterionResult check_modular(const VerifyOptions& options);
CriterionResult check_truncation_semantics(const VerifyOptions& options);

} // namespace interlink
