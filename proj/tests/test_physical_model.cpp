#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <sstream>

#include "shorcost/physical_model.hpp"
#include "shorcost/problem.hpp"

using namespace shorcost;

namespace {

CostParams params(int d1, int d2, int delta, int c_mul, int c_exp, int c_sep) {
    CostParams p;
    p.d1 = d1;
    p.d2 = d2;
    p.delta_off = delta;
    p.c_mul = c_mul;
    p.c_exp = c_exp;
    p.c_sep = c_sep;
    return p;
}

}  // namespace

TEST_CASE("physical qubits per logical qubit") {
    CHECK(physical_qubits_per_logical(27) == 1568);
    CHECK(physical_qubits_per_logical(3) == 32);
    CHECK(physical_qubits_per_logical(13) == 392);
    CHECK_THROWS(physical_qubits_per_logical(1));
}

TEST_CASE("board geometry at the layout anchor") {
    const FactoryTable table = FactoryTable::builtin();
    const auto& f = table.at(FactoryKind::CCZ, 17, 27);
    CHECK(f.footprint_w == 15);
    CHECK(f.footprint_h == 8);
    CHECK(factories_needed(f, {}) == 14);
    const auto s = make_shape(2048, 3029, params(17, 27, 4, 5, 5, 1024));
    const auto b = board_geometry(s, f);
    CHECK(b.pieces == 2);
    CHECK(b.width_per_piece == 113);
    CHECK(b.height == 63);
    // register rows above the operating area
    CHECK(b.height - (2 * f.footprint_h + kOperatingRows) == doctest::Approx(30).epsilon(0.1));
    CHECK(b.nondistill_fraction() > 0.7);
    CHECK(b.nondistill_fraction() < 0.8);

    const auto single = board_geometry(make_shape(1024, 1493, params(17, 27, 5, 5, 5, 1024)), f);
    CHECK(single.pieces == 1);
}

TEST_CASE("lookup addition time") {
    ArithmeticShape s{2048, 3072, 5, 5, 1024, 41};
    const auto t = lookup_addition_time(s, 27);
    CHECK(t.lookup == doctest::Approx(13.824e-3));
    CHECK(t.addition == doctest::Approx(21.3e-3));
    CHECK(t.misc == doctest::Approx(1e-3));
    CHECK(t.total == doctest::Approx(37e-3).epsilon(0.03));

    ArithmeticShape small{2048, 3072, 4, 4, 512, 30};
    const auto u = lookup_addition_time(small, 25);
    CHECK(u.lookup == doctest::Approx(3.2e-3));
    CHECK(u.addition == doctest::Approx(10.84e-3));
}

TEST_CASE("total runtime") {
    // the 7 hour figure uses the rounded 0.1 n_e n addition count; the exact
    // count is 0.08 n_e n
    const double hours = total_runtime(2048, 3072, params(17, 27, 10, 5, 5, 1024)) / 3600;
    CHECK(hours == doctest::Approx(7.0).epsilon(0.30));
    CHECK(hours == doctest::Approx(lookup_addition_count(2048, 3072, params(17, 27, 10, 5, 5, 1024)) *
                                   37e-3 / 3600).epsilon(0.03));
    CHECK(total_runtime(2048, 3029, params(15, 27, 4, 5, 5, 1024)) / 3600 ==
          doctest::Approx(5.1).epsilon(0.30));
    CHECK(total_runtime(1024, 1493, params(15, 27, 5, 5, 5, 1024)) / 3600 ==
          doctest::Approx(1.3).epsilon(0.30));
}

TEST_CASE("simplified physical estimate") {
    const auto e = physical_estimate(2048, 3029, params(17, 27, 4, 5, 5, 1024),
                                     FactoryTable::builtin());
    CHECK(e.physical_qubits > 22e6);
    CHECK(e.physical_qubits < 24e6);
    CHECK(e.expected_volume >= e.volume_per_run);
}

TEST_CASE("missing factory entry") {
    CHECK_THROWS_AS(physical_estimate(2048, 3029, params(13, 27, 4, 5, 5, 1024),
                                      FactoryTable::builtin()),
                    UnsupportedError);
}

TEST_CASE("factory table csv round trip") {
    const FactoryTable t = FactoryTable::builtin();
    std::stringstream ss;
    t.write_csv(ss);
    const FactoryTable back = FactoryTable::parse_csv(ss);
    CHECK(back.entries() == t.entries());
}

TEST_CASE("checked-in factory table equals the built-in one") {
    const FactoryTable file = FactoryTable::load_csv(SHORCOST_DATA_DIR "/factory_table_v1.csv");
    CHECK(file.entries() == FactoryTable::builtin().entries());
}

TEST_CASE("factory csv rejects a wrong version") {
    std::stringstream ss("# shorcost factory table v2\nkind,d1,d2,error_per_state,footprint_w,"
                         "footprint_h,cycles_per_state\n");
    CHECK_THROWS(FactoryTable::parse_csv(ss));
}

TEST_CASE("assumptions file") {
    const auto hw = load_assumptions(SHORCOST_DATA_DIR "/physical_default.json");
    const PhysicalAssumptions def;
    CHECK(hw.cycle_time_s == doctest::Approx(def.cycle_time_s));
    CHECK(hw.reaction_time_s == doctest::Approx(def.reaction_time_s));
    CHECK(hw.gate_error == def.gate_error);
    CHECK(hw.misc_time_s == doctest::Approx(def.misc_time_s));
    CHECK_THROWS(load_assumptions("/nonexistent/hw.json"));
}
