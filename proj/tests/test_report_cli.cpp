#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "specvar/report.hpp"

using namespace specvar;
using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum subcommand") {
    const auto r = run_cli({"spectrum", "--weights", "1/3,1/5"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["mu"] == 8);
    CHECK(j["n"] == 1);
    CHECK(j["gamma"] == "0");
    CHECK(j["theorem_1_1"] == true);
    CHECK(j["spectrum"][0] == "-7/15");
    CHECK(j["variance"] == j["rhs"]);
}

TEST_CASE("bp subcommand") {
    const auto r = run_cli({"bp", "--exponents", "2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["spectrum"] == json::array({"-1/2"}));
    CHECK(j["exponents"] == json::array({2}));
}

TEST_CASE("join subcommand") {
    const auto r = run_cli({"join", "--left", "1/3", "--right", "1/3"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["mu"] == 4);
    CHECK(j["spectrum"] == json::array({"-1/3", "0", "0", "1/3"}));
    CHECK(j["bilinearity"]["equal"] == true);
}

TEST_CASE("json reports round-trip byte-identically") {
    // D_5 weights, entered in reverse of the canonical sorted order.
    const auto first = run_cli({"spectrum", "--weights", "3/8,1/4"});
    REQUIRE(first.code == 0);
    const json j = json::parse(first.out);
    std::string weights;
    for (const auto& w : j["weights"]) {
        if (!weights.empty()) weights += ',';
        weights += w.get<std::string>();
    }
    const auto second = run_cli({"spectrum", "--weights", weights});
    CHECK(first.out == second.out);
}

TEST_CASE("csv carries the same numeric content as json") {
    const auto jr = run_cli({"spectrum", "--weights", "1/3,1/3"});
    const auto cr = run_cli({"--csv", "spectrum", "--weights", "1/3,1/3"});
    REQUIRE(jr.code == 0);
    REQUIRE(cr.code == 0);
    const json j = json::parse(jr.out);

    std::istringstream lines(cr.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "weights,mu,n,spectrum,variance,rhs,gamma,theorem_1_1");
    std::ostringstream expected;
    expected << "\"1/3 1/3\"," << j["mu"].get<std::size_t>() << ',' << j["n"].get<int>() << ','
             << "\"-1/3 0 0 1/3\"," << j["variance"].get<std::string>() << ','
             << j["rhs"].get<std::string>() << ',' << j["gamma"].get<std::string>() << ",true";
    CHECK(row == expected.str());
}

TEST_CASE("families and scan subcommands") {
    {
        const auto r = run_cli({"families", "--tpqr", "2,3,7"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["gamma"] == "1/1008");
        CHECK(j["is_zero"] == false);
    }
    {
        const auto r = run_cli({"families", "--series", "E3p", "--p", "1"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["gamma"] == "1/480");
    }
    {
        const auto r = run_cli({"scan", "--family", "tpqr", "--max", "6"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["summary"]["zeros"].size() == 3);
        CHECK(j["summary"]["min_gamma"] == "0");
    }
    {
        const auto r = run_cli({"--csv", "scan", "--family", "bimodal", "--pmax", "3"});
        REQUIRE(r.code == 0);
        CHECK(r.out.substr(0, r.out.find('\n')) == "series,p,gamma,nonneg,is_zero");
        CHECK(r.out.find("E3p,1,1/480,true,false") != std::string::npos);
    }
    {
        const auto r = run_cli({"families", "--tpqr", "2,3,7", "--series", "E3p"});
        CHECK(r.code == 2);  // exactly one selector
    }
}

TEST_CASE("frobenius subcommand") {
    const auto r = run_cli({"frobenius", "--n", "3", "--m", "2", "--metric", "flat", "--check",
                            "residue"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    REQUIRE(j["checks"].size() > 0);
    CHECK(j["checks"][0]["name"] == "caustic_residue");
    CHECK(j["checks"][0]["pass"] == true);
    const double measured = j["checks"][0]["measured"].get<double>();
    CHECK(std::abs(measured - (-1.0 / 48.0)) < 1e-6);
}

TEST_CASE("tolerance override tightens or loosens inexact checks only") {
    // An unreachable tolerance flips pass to false but the run still exits 0:
    // exit 2 is reserved for domain errors.
    const auto strict = run_cli({"frobenius", "--n", "4", "--m", "2", "--check", "residue",
                                 "--tol", "1e-30"});
    REQUIRE(strict.code == 0);
    const json js = json::parse(strict.out);
    CHECK(js["all_pass"] == false);
    CHECK(js["checks"][0]["tol"] == 1e-30);

    const auto loose = run_cli({"frobenius", "--n", "4", "--m", "2", "--check", "residue",
                                "--tol", "0.5"});
    REQUIRE(loose.code == 0);
    CHECK(json::parse(loose.out)["all_pass"] == true);
}

TEST_CASE("domain errors exit with code 2 and an error object") {
    {
        const auto r = run_cli({"spectrum", "--weights", "2/3"});
        CHECK(r.code == 2);
        const json j = json::parse(r.out);
        CHECK(j["error"]["type"] == "OutOfRange");
    }
    {
        const auto r = run_cli({"spectrum", "--weights", "1/3,2/5"});
        CHECK(r.code == 2);
        CHECK(json::parse(r.out)["error"]["type"] == "NotDivisible");
    }
    {
        const auto r = run_cli({"families", "--tpqr", "2,3,5"});
        CHECK(r.code == 2);
        CHECK(json::parse(r.out)["error"]["type"] == "OutOfRange");
    }
    {
        const auto r = run_cli({"bp", "--exponents", "1"});
        CHECK(r.code == 2);
        CHECK(json::parse(r.out)["error"]["type"] == "BadExponent");
    }
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli({"spectrum", "--weights", "1/3", "--bogus"}).code == 1);
    CHECK(run_cli({"nonsense"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"scan", "--family", "unknown"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("reports can be written to a file") {
    const std::string path = "cli_out_test.json";
    const auto r = run_cli({"--out", path, "spectrum", "--weights", "1/2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json j;
    f >> j;
    CHECK(j["mu"] == 1);
    std::remove(path.c_str());
}
