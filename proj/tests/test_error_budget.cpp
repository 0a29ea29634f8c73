#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shorcost/error_budget.hpp"
#include "shorcost/factory.hpp"

using namespace shorcost;

TEST_CASE("deviation per addition") {
    CHECK(deviation_per_addition(2048, 1024, 44) == doctest::Approx(1.1368683772161603e-13));
    CHECK(deviation_per_addition(2048, 1024, 45) == deviation_per_addition(2048, 1024, 44) / 2);
    CHECK(deviation_per_addition(1024, 1024, 0) == 1.0);
}

TEST_CASE("total deviation") {
    CostParams p;
    p.delta_off = 10;
    p.c_exp = p.c_mul = 5;
    p.c_sep = 1024;
    CHECK(total_deviation(2048, 3072, p) == doctest::Approx(5.859078555658925e-08));
    p.delta_off = 4;
    CHECK(total_deviation(2048, 3029, p) == doctest::Approx(3.6861165426671505e-06));
    const ArithmeticShape crowded{64, 100, 1, 1, 1, 0};
    CHECK(total_deviation(crowded) == 1.0);
}

TEST_CASE("approximation error") {
    CHECK(approximation_error(1e-7) == doctest::Approx(6.3245553e-4));
    CHECK(approximation_error(0) == 0);
    CHECK(approximation_error(0.25) == 1.0);
    CHECK_THROWS(approximation_error(-0.1));
}

TEST_CASE("logical error per qubit cycle") {
    CHECK(logical_error_per_qubit_cycle(27) == doctest::Approx(1e-15));
    CHECK(logical_error_per_qubit_cycle(29) == doctest::Approx(1e-16));
    CHECK(logical_error_per_qubit_cycle(3) == doctest::Approx(1e-3));
    CHECK(logical_error_per_qubit_cycle(27, 1e-3) == logical_error_per_qubit_cycle(27));
    CHECK(logical_error_per_qubit_cycle(27, 1e-4) < logical_error_per_qubit_cycle(27));
    CHECK_THROWS(logical_error_per_qubit_cycle(28));
}

TEST_CASE("topological error") {
    CHECK(topological_error(226 * 63, 0.75, 25e9, 27) == doctest::Approx(0.2669625));
    CHECK(topological_error(226 * 63, 0.75, 25e9, 29) == doctest::Approx(0.02669625));
    CHECK(topological_error(1e9, 0.0, 1e12, 3) == 0);
    CHECK(topological_error(1e9, 1.0, 1e12, 3) == 1.0);
}

TEST_CASE("distillation error") {
    const auto& f = FactoryTable::builtin().at(FactoryKind::CCZ, 17, 27);
    CHECK(f.error_per_state == doctest::Approx(2.13e-11));
    CHECK(distillation_error(3e9, f) == doctest::Approx(0.064).epsilon(0.01));
    CHECK(distillation_error(0, f) == 0);
}

TEST_CASE("retry risk") {
    CHECK(retry_risk(0.27, 0.064, 0.004, 0.01) == doctest::Approx(0.3276).epsilon(0.01));
    CHECK(retry_risk(0, 0, 0) == doctest::Approx(0.01));
    CHECK(retry_risk(1, 0, 0) == 1.0);
    CHECK_THROWS(retry_risk(1.5, 0, 0));
}

TEST_CASE("volume scaling rule") {
    CHECK(volume_scaling_rule(80.0, 1e-4).volume == 10.0);
    CHECK(volume_scaling_rule(81.0, 1e-5).volume == 3.0);
    CHECK(volume_scaling_rule(5.0, 1e-3).volume == 5.0);
    CHECK_FALSE(volume_scaling_rule(5.0, 1e-3).outside_validity);
    CHECK(volume_scaling_rule(5.0, 1e-6).outside_validity);
    CHECK_THROWS(volume_scaling_rule(5.0, 0.0));
}
