#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <set>

#include "shorcost/sim/arithmetic.hpp"
#include "shorcost/sim/circuit.hpp"

using namespace shorcost::sim;

TEST_CASE("empty circuit") {
    Circuit c;
    c.add_register("q", 3);
    BasisState s(3);
    s.write(c.qubits("q"), 5);
    CHECK(simulate(c, s) == s);
    CHECK(count_resources(c) == ResourceCount{});
}

TEST_CASE("single not") {
    Circuit c;
    auto q = c.add_register("q", 1);
    c.x(q[0]);
    CHECK(simulate(c, BasisState(1)).get(0));
}

TEST_CASE("classical control") {
    Circuit c;
    auto q = c.add_register("q", 2);
    c.set_num_cbits(2);
    c.classical_x(1, q[1]);
    BasisState s(2, 2);
    CHECK(simulate(c, s) == s);
    s.set_record(1, true);
    CHECK(simulate(c, s).get(1));
}

TEST_CASE("gate ranges are checked") {
    Circuit c;
    c.add_register("q", 2);
    CHECK_THROWS_AS(c.x(2), std::out_of_range);
    CHECK_THROWS(c.ccx(0, 1, 1));
    CHECK_THROWS(c.add_register("q", 1));
}

TEST_CASE("depth follows dependent toffolis") {
    Circuit c;
    auto q = c.add_register("q", 6);
    c.ccx(q[0], q[1], q[2]);
    c.ccx(q[3], q[4], q[5]);
    c.ccx(q[2], q[5], q[0]);
    c.ccx(q[0], q[1], q[3], false);
    const auto r = count_resources(c);
    CHECK(r.toffolis == 3);
    CHECK(r.measurement_depth == 2);
    CHECK(r.uncounted_toffolis == 1);
}

TEST_CASE("reverse undoes a range") {
    Circuit c = build_cuccaro_adder(3, false);
    const std::size_t end = c.size();
    c.append_reverse(0, end, true);
    BasisState s(c.num_qubits());
    s.write(c.qubits("a"), 5);
    s.write(c.qubits("b"), 6);
    CHECK(simulate(c, s) == s);
}

TEST_CASE("circuits are bijections") {
    const Circuit c = build_cuccaro_adder(2, true);
    const int width = c.num_qubits();
    std::set<std::uint64_t> images;
    std::vector<int> all(width);
    for (int i = 0; i < width; ++i) all[i] = i;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
        BasisState s(width);
        s.write(all, v);
        images.insert(simulate(c, s).read(all));
    }
    CHECK(images.size() == (std::size_t{1} << width));
}

TEST_CASE("text export round trip") {
    Circuit c = build_cuccaro_adder(4, true);
    c.set_num_cbits(1);
    c.classical_x(0, 0);
    c.ccx(0, 1, 2, false);
    const std::string text = to_text(c);
    CHECK(parse_text(text) == c);
    CHECK(text.find("TOFFOLI 0 1 2 ~") != std::string::npos);
    CHECK_THROWS(parse_text("qubits 2\nFOO 1\n"));
    CHECK_THROWS(parse_text("qubits 2\nTOFFOLI 0 1\n"));
    CHECK_THROWS(parse_text("qubits 3\nTOFFOLI 0 1 2 x\n"));
}
