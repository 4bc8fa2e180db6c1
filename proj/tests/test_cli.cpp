#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "interlink/cli.hpp"
#include "interlink/zigzag.hpp"
#include "json.hpp"

namespace
{

struct Outcome
{
    int status;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    args.insert(args.begin(), "interlink");
    std::ostringstream out;
    std::ostringstream err;
    const int status = interlink::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text)
{
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(nlohmann::json::parse(line));
    }
    return out;
}

nlohmann::json single(const Outcome& o)
{
    const auto rs = records(o.out);
    REQUIRE(rs.size() == 1);
    return rs.front();
}

} // namespace

TEST_CASE("zigzag record carries the tangent numbers")
{
    const auto o = call({"zigzag", "--n-max", "13", "--format", "json"});
    CHECK(o.status == 0);
    CHECK(o.out.find("22368256") != std::string::npos);
    const auto j = single(o);
    CHECK(j["command"] == "zigzag");
    CHECK(j["outputs"]["counts"][13] == 22368256);
    CHECK(j["outputs"]["tangent_numbers"] == nlohmann::json::array({1, 2, 16, 272, 7936, 353792, 22368256}));
    CHECK_FALSE(j["provenance"].get<std::string>().empty());
}

TEST_CASE("big counts are printed as exact integers")
{
    const auto o = call({"zigzag", "--n-max", "40"});
    CHECK(o.status == 0);
    const std::string t40 = interlink::to_string(interlink::zigzag_numbers(40)[40]);
    // Well past 2^64, so any floating detour would lose digits.
    CHECK(t40.size() > 20);
    CHECK(o.out.find("," + t40 + "]") != std::string::npos);
}

TEST_CASE("zigzag csv with oracle column")
{
    const auto o = call({"zigzag", "--n-max", "5", "--check-oracle", "--format", "csv"});
    CHECK(o.status == 0);
    CHECK(o.out == "n,count,enumerated\n0,1,1\n1,1,1\n2,1,1\n3,2,2\n4,5,5\n5,16,16\n");
}

TEST_CASE("exit codes")
{
    CHECK(call({"pendulum", "--amplitude", "4.0"}).status == 2);
    CHECK(call({"nonsense"}).status == 2);
    CHECK(call({}).status == 2);
    CHECK(call({"zigzag", "--n-max", "abc"}).status == 2);
    CHECK(call({"zigzag", "--format", "xml"}).status == 2);
    CHECK(call({"eisenstein", "--weight", "2"}).status == 2);
    CHECK(call({"agm", "--a", "1"}).status == 2);
    CHECK(call({"agm", "--a", "-1", "--b", "1"}).status == 2);
    CHECK(call({"theta", "verify", "--q", "0.9"}).status == 2);
    CHECK(call({"ellipk", "--k", "1.5"}).status == 2);
    CHECK(call({"zigzag", "--check-oracle", "--enumerate-max", "13"}).status == 2);
    CHECK(call({"rk", "--k", "5", "--n-max", "10", "--check-oracle"}).status == 2);
    CHECK(call({"eisenstein", "verify", "--gamma", "1,1,1,1"}).status == 2);
    CHECK(call({"wp", "--z", "0,0"}).status == 2);
    // Numeric failures: overflowing series terms, and a swing slower than the search window.
    CHECK(call({"hyp2f1", "--alpha", "1e200", "--beta", "1e200", "--x", "0.5", "--terms", "10"}).status == 3);
    CHECK(call({"pendulum", "--amplitude", "3.1415926", "--method", "simulate"}).status == 3);
    CHECK(call({"--help"}).status == 0);
}

TEST_CASE("unknown subcommand prints usage on the diagnostic stream")
{
    const auto o = call({"frobnicate"});
    CHECK(o.status == 2);
    CHECK(o.out.empty());
    CHECK(o.err.find("frobnicate") != std::string::npos);
    CHECK(o.err.find("Usage") != std::string::npos);
}

TEST_CASE("verification failures exit 4")
{
    const auto inv = call({"eisenstein", "verify", "--gamma", "0,-1,1,0", "--tau", "0.3,1.1", "--radius", "300"});
    CHECK(inv.status == 0);
    const auto j = single(inv);
    CHECK(j["residuals"]["residual"].get<double>() < 1e-5);
    CHECK(j["residuals"]["residual"].get<double>() <= j["residuals"]["bound"].get<double>());

    const auto both = call({"pendulum", "--amplitude", "2.0", "--method", "both", "--dt", "0.002"});
    CHECK(both.status == 0);
    CHECK(single(both)["residuals"]["relative_difference"].get<double>() <= 1e-6);

    const auto faulty = call({"verify-all", "--profile", "quick", "--inject-fault", "gauss-coefficient"});
    CHECK(faulty.status == 4);
}

TEST_CASE("every subcommand emits a well-formed record")
{
    const std::vector<std::vector<std::string>> cases{
        {"agm", "--a", "1", "--b", "0.5", "--trace"},
        {"agm", "series", "--k-max", "3", "--x", "0.1,0.5"},
        {"agm", "verify-ode", "--k-max", "10"},
        {"agm", "verify-feq", "--k-max", "5"},
        {"ellipk", "--k", "0.5"},
        {"ellipk", "--k", "0.99", "--method", "agm"},
        {"hyp2f1", "--alpha", "0.5", "--beta", "0.5", "--gamma", "1", "--x", "0.25", "--terms", "60"},
        {"theta", "--q", "0.3"},
        {"theta", "verify", "--q", "0.5"},
        {"rk", "--k", "3", "--n-max", "20", "--check-oracle"},
        {"pendulum", "--amplitude", "1.0", "--method", "both"},
        {"pendulum", "sweep", "--amplitudes", "0.1,1,2"},
        {"eisenstein", "--tau", "0,1", "--weight", "6", "--radius", "100"},
        {"wp", "--tau", "0,1", "--z", "0.3,0.2", "--radius", "100", "--check-ode"},
    };
    for (const auto& args : cases) {
        const auto o = call(args);
        CAPTURE(args[0]);
        CHECK(o.status == 0);
        const auto j = single(o);
        for (const char* key : {"command", "inputs", "outputs", "residuals", "provenance"}) {
            CHECK(j.contains(key));
        }
        CHECK_FALSE(j["provenance"].get<std::string>().empty());
    }
}

TEST_CASE("subcommand values")
{
    const auto a = single(call({"agm", "--a", "1", "--b", "1"}));
    CHECK(a["outputs"]["limit"] == 1.0);
    CHECK(a["outputs"]["iterations"] == 1);

    const auto s = single(call({"agm", "series", "--k-max", "3"}));
    CHECK(s["outputs"]["coefficients"] == nlohmann::json::array({"1", "1/4", "9/64", "25/256"}));

    const auto k = single(call({"ellipk", "--k", "0", "--method", "all"}));
    CHECK(k["outputs"]["agm"] == 1.5707963267948966);

    const auto rk = single(call({"rk", "--k", "2", "--n-max", "5"}));
    CHECK(rk["outputs"]["r"] == nlohmann::json::array({1, 4, 4, 0, 4, 8}));

    const auto sweep = call({"pendulum", "sweep", "--amplitudes", "0.5,1", "--format", "csv", "--length", "2"});
    CHECK(sweep.status == 0);
    CHECK(sweep.out.rfind("amplitude,ratio,period_s\n0.5,", 0) == 0);

    const auto g = single(call({"pendulum", "--amplitude", "1.0", "--gravity", "9.80665"}));
    CHECK(g["inputs"]["gravity"] == 9.80665);
}

TEST_CASE("property: identical arguments give byte-identical output")
{
    const std::vector<std::vector<std::string>> cases{
        {"zigzag", "--n-max", "60", "--check-oracle"},
        {"pendulum", "--amplitude", "2.5", "--method", "both"},
        {"wp", "--tau", "0.3,1.1", "--z", "0.2,0.4", "--radius", "80", "--check-ode"},
        {"theta", "verify", "--q", "0.45"},
        {"verify-all", "--profile", "quick"},
    };
    for (const auto& args : cases) {
        const auto first = call(args);
        const auto second = call(args);
        CAPTURE(args[0]);
        CHECK(first.status == second.status);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("verify-all")
{
    const auto quick = call({"verify-all", "--profile", "quick"});
    CHECK(quick.status == 0);
    const auto rs = records(quick.out);
    REQUIRE(rs.size() == 11);
    for (int i = 0; i < 10; ++i) {
        CHECK(rs[i]["inputs"]["criterion"] == i + 1);
        CHECK(rs[i]["outputs"]["passed"] == true);
    }
    CHECK(rs[10]["outputs"]["passed"] == 10);

    const auto faulty = call({"verify-all", "--profile", "quick", "--inject-fault", "gauss-coefficient"});
    CHECK(faulty.status == 4);
    CHECK(records(faulty.out).back()["outputs"]["failed"] == nlohmann::json::array({3, 4}));
    CHECK(faulty.err.find("criterion 3") != std::string::npos);
}

TEST_CASE("profile comes from the environment unless given")
{
    setenv("INTERLINK_PROFILE", "quick", 1);
    const auto from_env = records(call({"verify-all"}).out);
    CHECK(from_env.front()["inputs"]["profile"] == "quick");
    setenv("INTERLINK_PROFILE", "bogus", 1);
    CHECK(call({"verify-all"}).status == 2);
    unsetenv("INTERLINK_PROFILE");
}
