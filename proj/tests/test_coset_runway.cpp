#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <random>

#include "shorcost/sim/coset.hpp"
#include "shorcost/sim/runway.hpp"
#include "shorcost/verify.hpp"

using namespace shorcost::sim;

TEST_CASE("coset encoding") {
    const auto r = coset_encode(3, 7, 2);
    CHECK(r.population == std::vector<std::uint64_t>{3, 10, 17, 24});
    CHECK(r.width() == 3 + 2);
    CHECK(coset_decode(17, 7) == 3);
    CHECK(coset_member(3, 7, 2) == 17);
    CHECK_THROWS(coset_encode(7, 7, 2));
    CHECK(modulus_bits(8) == 3);
    CHECK(modulus_bits(9) == 4);
}

TEST_CASE("coset round trip") {
    for (std::uint64_t N : {5u, 15u, 77u}) {
        for (std::uint64_t k = 0; k < N; ++k) {
            for (auto v : coset_encode(k, N, 4).population) REQUIRE(coset_decode(v, N) == k);
        }
    }
}

TEST_CASE("runway layout") {
    const auto l = make_runway_layout(10, 4, 3, 2);
    CHECK(l.pieces() == 3);
    CHECK(l.piece_main_bits(2) == 2);
    CHECK(l.segment_width(2) == 4);
    CHECK(l.runway_offset(0) == 4);
    CHECK(l.segment_offset(1) == 7);
    CHECK(l.total_width() == 10 + 2 + 2 * 3);
    CHECK(l.value_width() == 12);
}

TEST_CASE("runways are exact without overflow") {
    const auto layout = make_runway_layout(8, 4, 3);
    std::vector<std::uint64_t> table{0, 255, 17, 128, 99, 1, 200, 64};
    const Circuit c = build_runway_lookup_addition(table, 3, layout);
    for (std::uint64_t v = 0; v < 256; v += 3) {
        for (std::uint64_t r = 0; r + 1 < 8; ++r) {
            for (std::uint64_t a = 0; a < table.size(); ++a) {
                const std::uint64_t rw[] = {r};
                BasisState s(c.num_qubits());
                s.write(c.qubits("register"), insert_runways(layout, v, rw));
                s.write(c.qubits("address"), a);
                const auto out = simulate(c, s);
                REQUIRE(remove_runways_classically(layout, out.read(c.qubits("register"))) ==
                        (v + table[a]) % 256);
                REQUIRE(out.read(c.qubits("lookup")) == 0);
            }
        }
    }
}

TEST_CASE("runway lookup addition count") {
    // every piece carries into c_pad bits: 2n + pieces (c_pad - 1) + 2^w - 2
    const auto layout = make_runway_layout(16, 4, 3, 3);
    std::vector<std::uint64_t> table(32, 7);
    const Circuit c = build_runway_lookup_addition(table, 5, layout);
    CHECK(count_resources(c).toffolis == 2 * 16 + 4 * (3 - 1) + 32 - 2);
}

TEST_CASE("runway suite") {
    const auto r = shorcost::verify_runways();
    CHECK_MESSAGE(r.passed, r.detail);
}
