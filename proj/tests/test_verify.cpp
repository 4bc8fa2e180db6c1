#include "doctest.h"
#include "interlink/errors.hpp"
#include "interlink/verify.hpp"

using interlink::Fault;
using interlink::Profile;

TEST_CASE("profile and fault parsing")
{
    CHECK(interlink::parse_profile("quick") == Profile::quick);
    CHECK(interlink::parse_profile("full") == Profile::full);
    CHECK(interlink::to_string(Profile::quick) == "quick");
    CHECK_THROWS_AS(interlink::parse_profile("fast"), interlink::ArgumentError);
    CHECK(interlink::parse_fault("gauss-coefficient") == Fault::gauss_coefficient);
    CHECK_THROWS_AS(interlink::parse_fault("everything"), interlink::ArgumentError);
}

TEST_CASE("quick profile passes every criterion")
{
    const auto results = interlink::run_acceptance({Profile::quick, Fault::none});
    REQUIRE(results.size() == 10);
    for (std::size_t i = 0; i < results.size(); ++i) {
        CAPTURE(results[i].name);
        CHECK(results[i].id == static_cast<int>(i) + 1);
        CHECK(results[i].passed);
        CHECK(results[i].failure.empty());
        CHECK_FALSE(results[i].measurements.empty());
    }
}

TEST_CASE("an injected coefficient fault fails exactly the series criteria")
{
    const interlink::VerifyOptions faulty{Profile::quick, Fault::gauss_coefficient};
    CHECK_FALSE(interlink::check_exact_residuals(faulty).passed);
    CHECK_FALSE(interlink::check_gauss_coefficients(faulty).passed);
    CHECK(interlink::check_tangent_reproduction(faulty).passed);
    CHECK(interlink::check_elliptic_agreement(faulty).passed);
}
