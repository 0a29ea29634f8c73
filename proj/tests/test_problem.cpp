#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <set>

#include "shorcost/problem.hpp"

using namespace shorcost;

TEST_CASE("exponent lengths") {
    CHECK(exponent_length(ProblemKind::RsaViaShortDlog, 2048, 112) == 3029);
    CHECK(exponent_length(ProblemKind::RsaViaShortDlog, 1024, 80) == 1493);
    CHECK(exponent_length(ProblemKind::SafePrimeFullDlog, 2048, 0) == 6141);
    CHECK(exponent_length(ProblemKind::KnownOrderShorDlog, 2048, 0, 2047) == 4104);
    CHECK(exponent_length(ProblemKind::SchnorrGroupDlog, 3072, 128) == 768);
}

TEST_CASE("exponent length preconditions") {
    CHECK_THROWS_AS(exponent_length(ProblemKind::RsaViaShortDlog, 2047, 112), std::invalid_argument);
    CHECK_THROWS_AS(exponent_length(ProblemKind::SchnorrGroupDlog, 2048, 0), std::invalid_argument);
    CHECK_THROWS_AS(exponent_length(ProblemKind::KnownOrderShorDlog, 2048, 112),
                    std::invalid_argument);
    CHECK_THROWS(exponent_length(ProblemKind::SafePrimeFullDlog, 8, 0));
}

TEST_CASE("security levels") {
    CHECK(security_level(2048) == 112);
    CHECK(security_level(3072) == 128);
    CHECK(security_level(8192) == 200);
    CHECK_THROWS_AS(security_level(2000), UnsupportedError);
}

TEST_CASE("catalog covers six families at seven sizes") {
    const auto all = catalog();
    CHECK(all.size() == 42);
    std::set<std::pair<int, int>> keys;
    for (const auto& p : all) {
        CHECK(p.n_e > 0);
        keys.insert({static_cast<int>(p.family), p.n});
    }
    CHECK(keys.size() == all.size());
}

TEST_CASE("known-order blocks differ only in n_r") {
    const auto schnorr = make_instance(Family::DlpSchnorrShor, 2048);
    const auto safe = make_instance(Family::DlpSafeShor, 2048);
    CHECK(schnorr.kind == safe.kind);
    CHECK(schnorr.n_r == 224);
    CHECK(safe.n_r == 2047);
    CHECK(safe.n_e == 4104);
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::Rsa, Family::DlpSchnorr, Family::DlpSafeShort, Family::DlpSafeFull,
                     Family::DlpSchnorrShor, Family::DlpSafeShor}) {
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK_THROWS(parse_family("ecc"));
}
