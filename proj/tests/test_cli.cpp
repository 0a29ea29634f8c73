#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shorcost/cli.hpp"

using namespace shorcost;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("estimate rsa 2048") {
    const auto r = run({"estimate", "--problem", "rsa", "--n", "2048", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("expected_volume").get<double>() == doctest::Approx(5.9).epsilon(0.25));
    CHECK(j.at("hours_per_run").get<double>() == doctest::Approx(5.1).epsilon(0.30));
}

TEST_CASE("odd rsa size is a usage error") {
    const auto r = run({"estimate", "--problem", "rsa", "--n", "2047"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("even n") != std::string::npos);
}

TEST_CASE("fixed parameters") {
    const auto r = run({"estimate", "--n", "2048", "--params", "17,27,4,5,5,1024", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("d1").get<int>() == 17);
    CHECK(j.at("physical_qubits").get<double>() > 22e6);
    CHECK(run({"estimate", "--n", "2048", "--params", "17,27,4"}).code == kExitUsage);
}

TEST_CASE("table writes seven rows") {
    const auto path = (std::filesystem::temp_directory_path() / "shorcost_cli_rsa.csv").string();
    REQUIRE(run({"table", "rsa", "--out", path}).code == kExitOk);
    std::ifstream in(path);
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 8);
    std::remove(path.c_str());
}

TEST_CASE("unknown subcommand or flag") {
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"estimate", "--n", "2048", "--bogus"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"table", "ecc"}).code == kExitUsage);
}

TEST_CASE("infeasible hardware") {
    const auto r = run({"--gate-error", "0.05", "estimate", "--n", "2048"});
    CHECK(r.code == kExitInfeasible);
    CHECK(r.err.find("topological") != std::string::npos);
}

TEST_CASE("sweep") {
    const auto r = run({"sweep", "--from", "1024", "--to", "4096", "--points", "3"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("n,n_e,expected_volume", 0) == 0);
    CHECK(r.out.find("\n2048,3029,") != std::string::npos);
    CHECK(run({"sweep", "--problem", "dlp-schnorr", "--from", "1000", "--to", "2000"}).code ==
          kExitUsage);
}

TEST_CASE("simulate factors a small modulus") {
    const auto r = run({"simulate", "--modulus", "55", "--g", "2", "--exponent", "13"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("= 52 (oracle 52)") != std::string::npos);
    CHECK(r.out.find("55 = 5 x 11") != std::string::npos);
}

TEST_CASE("lower gate error shrinks the estimate") {
    auto volume = [](const std::string& p) {
        const auto r = run({"--gate-error", p, "estimate", "--n", "2048", "--format", "json"});
        REQUIRE(r.code == kExitOk);
        return nlohmann::json::parse(r.out).at("expected_volume").get<double>();
    };
    CHECK(volume("1e-4") < volume("1e-3"));
}
