#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <random>

#include "shorcost/abstract_cost.hpp"
#include "shorcost/sim/coset.hpp"
#include "shorcost/sim/modexp.hpp"
#include "shorcost/verify.hpp"

using namespace shorcost::sim;

TEST_CASE("number theory helpers") {
    CHECK(pow_mod(2, 5, 21) == 11);
    CHECK(pow_mod(7, 4, 15) == 1);
    CHECK(pow_mod(3, 0, 7) == 1);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_THROWS(inverse_mod(3, 15));
}

TEST_CASE("fixed examples") {
    std::mt19937_64 rng(3);
    ModexpParams p;
    p.c_pad = 10;
    const auto m21 = build_windowed_modexp(2, 21, 5, p);
    CHECK(run_modexp(m21, 5, sample_offsets(m21, rng)) == 11);
    const auto m15 = build_windowed_modexp(7, 15, 4, p);
    CHECK(run_modexp(m15, 4, sample_offsets(m15, rng)) == 1);
}

TEST_CASE("every exponent against pow_mod") {
    std::mt19937_64 rng(11);
    ModexpParams p;
    p.c_pad = 12;
    for (std::uint64_t N : {15u, 21u, 33u, 35u, 55u, 77u}) {
        const int n = modulus_bits(N);
        const auto m = build_windowed_modexp(2, N, n, p);
        int bad = 0;
        for (std::uint64_t e = 0; e < 256; ++e) {
            bad += run_modexp(m, e, sample_offsets(m, rng)) != pow_mod(2, e, N);
        }
        CAPTURE(N);
        CHECK(bad <= modexp_deviation_bound(m) * 256 + 2);
    }
}

TEST_CASE("counted toffolis per lookup addition stay near the abstract term") {
    ModexpParams p;
    p.c_pad = 6;
    const auto m = build_windowed_modexp(2, 55, 6, p);
    const auto r = count_resources(m.circuit);
    const double per = static_cast<double>(r.toffolis) / m.lookup_additions;
    const shorcost::ArithmeticShape shape{6, p.n_e, p.c_exp, p.c_mul, p.c_sep, p.c_pad};
    const double abstract = shorcost::toffolis_per_lookup_addition(shape);
    CHECK(per <= abstract + 8);
    CHECK(per >= abstract - 8);
}

TEST_CASE("preconditions") {
    CHECK_THROWS(build_windowed_modexp(5, 55, 6, ModexpParams{}));
    CHECK_THROWS(build_windowed_modexp(2, 55, 5, ModexpParams{}));
    CHECK_THROWS(build_windowed_modexp(2, 5000, 13, ModexpParams{}));
}

TEST_CASE("modexp suite, quick") {
    const auto r = shorcost::verify_modexp(2);
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("gate count suite") {
    const auto r = shorcost::verify_gate_counts();
    CHECK_MESSAGE(r.passed, r.detail);
}
