#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <set>

#include "shorcost/optimizer.hpp"

using namespace shorcost;

TEST_CASE("grid") {
    const auto grid = enumerate_grid();
    CHECK(grid.size() == kGridSize);
    CHECK(kGridSize == 56700);
    CHECK(std::set<CostParams>(grid.begin(), grid.end()).size() == grid.size());
    CHECK(std::is_sorted(grid.begin(), grid.end(), [](const CostParams& a, const CostParams& b) {
        return std::tie(a.d1, a.d2, a.delta_off, a.c_mul, a.c_exp, a.c_sep, a.factory) <
               std::tie(b.d1, b.d2, b.delta_off, b.c_mul, b.c_exp, b.c_sep, b.factory);
    }));
}

TEST_CASE("skewed volume") {
    CHECK(skewed_volume(1, 1, 0) == 1);
    CHECK(skewed_volume(1, 2, 0.5) == doctest::Approx(4));
    CHECK(std::isinf(skewed_volume(1, 1, 1)));
}

TEST_CASE("rsa optimum against the published rows") {
    const EstimationContext ctx;
    struct Row {
        int n;
        double expected, megaqubits, hours;
    };
    for (Row r : {Row{1024, 0.5, 9.7, 1.3}, Row{2048, 5.9, 20, 5.1}, Row{3072, 21, 38, 12}}) {
        CAPTURE(r.n);
        const auto e = optimize(make_instance(Family::Rsa, r.n), ctx);
        CHECK(e.physical.expected_volume == doctest::Approx(r.expected).epsilon(0.25));
        CHECK(e.physical.physical_qubits / 1e6 == doctest::Approx(r.megaqubits).epsilon(0.25));
        CHECK(e.physical.runtime_per_run / 3600 == doctest::Approx(r.hours).epsilon(0.30));
        CHECK_FALSE(e.flagged);
    }
}

TEST_CASE("schnorr 3072") {
    const auto e = optimize(make_instance(Family::DlpSchnorr, 3072), EstimationContext{});
    CHECK(e.physical.expected_volume == doctest::Approx(2.9).epsilon(0.25));
}

TEST_CASE("parallel search equals serial search") {
    const EstimationContext ctx;
    for (Family f : {Family::Rsa, Family::DlpSafeFull}) {
        const auto p = make_instance(f, 2048);
        const auto a = optimize(p, ctx);
        const auto b = optimize_serial(p, ctx);
        CHECK(a.params == b.params);
        CHECK(a.objective == b.objective);
    }
}

TEST_CASE("optimum is deterministic") {
    const auto p = make_instance(Family::DlpSafeShort, 4096);
    const EstimationContext ctx;
    CHECK(optimize(p, ctx).params == optimize(p, ctx).params);
}

TEST_CASE("no grid point beats the optimum") {
    const auto p = make_instance(Family::Rsa, 1024);
    const EstimationContext ctx;
    const auto best = optimize_serial(p, ctx);
    const auto grid = enumerate_grid();
    for (std::size_t i = 0; i < grid.size(); i += 97) {
        CHECK_FALSE(better(evaluate(p, grid[i], ctx), best));
    }
}

TEST_CASE("schnorr and safe-prime short blocks agree") {
    const EstimationContext ctx;
    const auto a = make_table(Family::DlpSchnorr, ctx);
    const auto b = make_table(Family::DlpSafeShort, ctx);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].physical.expected_volume == b[i].physical.expected_volume);
    }
}

TEST_CASE("infeasible hardware names the dominating component") {
    EstimationContext ctx = EstimationContext::with_assumptions(PhysicalAssumptions{1e-6, 10e-6, 0.05, 1e-3});
    try {
        optimize(make_instance(Family::Rsa, 2048), ctx);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.dominating_component() == "topological");
    }
}

TEST_CASE("custom instances") {
    const auto p = custom_instance(ProblemKind::RsaViaShortDlog, 100, 110);
    CHECK(p.n == 100);
    CHECK(p.n_e == 110);
    CHECK_THROWS(custom_instance(ProblemKind::RsaViaShortDlog, 8, 10));
    CHECK_THROWS(custom_instance(ProblemKind::RsaViaShortDlog, 100, 0));
    const auto e = optimize(p, EstimationContext{});
    CHECK(std::isfinite(e.objective));
}
