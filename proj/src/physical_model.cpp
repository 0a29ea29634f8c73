#include "shorcost/physical_model.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace shorcost {

namespace {

constexpr double kSecondsPerDay = 86400.0;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

PhysicalAssumptions load_assumptions(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config '" + path + "': " + e.what());
    }
    PhysicalAssumptions hw;
    if (j.contains("cycle_time_us")) hw.cycle_time_s = j.at("cycle_time_us").get<double>() * 1e-6;
    if (j.contains("reaction_time_us")) hw.reaction_time_s = j.at("reaction_time_us").get<double>() * 1e-6;
    if (j.contains("gate_error")) hw.gate_error = j.at("gate_error").get<double>();
    if (j.contains("misc_time_ms")) hw.misc_time_s = j.at("misc_time_ms").get<double>() * 1e-3;
    if (hw.cycle_time_s <= 0 || hw.reaction_time_s <= 0 || hw.gate_error <= 0 || hw.misc_time_s < 0) {
        throw std::runtime_error("config '" + path + "': values must be positive");
    }
    return hw;
}

std::int64_t physical_qubits_per_logical(int d) {
    if (d < 3) {
        throw std::invalid_argument("code distance must be at least 3");
    }
    return 2 * std::int64_t{d + 1} * (d + 1);
}

int factories_needed(const FactoryModel& factory, const PhysicalAssumptions& hw) {
    // one Toffoli per reaction time per piece
    const double demand = factory.states_per_toffoli() * factory.cycles_per_state *
                          hw.cycle_time_s / hw.reaction_time_s;
    return std::max(1, static_cast<int>(std::ceil(demand - 1e-9)));
}

BoardLayout board_geometry(const ArithmeticShape& s, const FactoryModel& factory,
                           const PhysicalAssumptions& hw) {
    BoardLayout b;
    b.pieces = s.pieces();
    b.factories_per_piece = factories_needed(factory, hw);
    // two rows of factories, a one-qubit routing gap on each side of every factory
    const int per_row = (b.factories_per_piece + 1) / 2;
    b.width_per_piece = factory.footprint_w * per_row + per_row + 1;
    const int operating = 2 * factory.footprint_h + kOperatingRows;
    const auto register_rows = 3 * ceil_div(std::int64_t{s.c_sep} + s.c_pad, b.width_per_piece);
    b.height = operating + static_cast<int>(register_rows);
    b.logical_qubit_total = std::int64_t{b.pieces} * b.width_per_piece * b.height;
    b.factory_area = std::int64_t{b.pieces} * b.factories_per_piece * factory.footprint_w *
                     factory.footprint_h;
    return b;
}

LookupAdditionTime lookup_addition_time(const ArithmeticShape& s, int d2,
                                        const PhysicalAssumptions& hw) {
    LookupAdditionTime t;
    // double-access hallways halve the code-depth-limited lookup
    t.lookup = hw.cycle_time_s * (d2 / 2.0) * std::ldexp(1.0, s.c_exp + s.c_mul);
    t.addition = 2.0 * (s.c_sep + s.c_pad) * hw.reaction_time_s;
    t.misc = hw.misc_time_s;
    t.total = t.lookup + t.addition + t.misc;
    return t;
}

double total_runtime(const ArithmeticShape& s, int d2, const PhysicalAssumptions& hw) {
    return static_cast<double>(lookup_addition_count(s)) * lookup_addition_time(s, d2, hw).total;
}

double total_runtime(int n, std::int64_t n_e, const CostParams& params,
                     const PhysicalAssumptions& hw) {
    return total_runtime(make_shape(n, n_e, params), params.d2, hw);
}

Assessment assess(int n, std::int64_t n_e, const CostParams& params, const FactoryTable& factories,
                  const PhysicalAssumptions& hw) {
    const ArithmeticShape s = make_shape(n, n_e, params);
    const FactoryModel& factory = factories.at(params.factory, params.d1, params.d2);

    Assessment a;
    a.abstract = AbstractCosts{lookup_addition_count(s), toffoli_count(s), measurement_depth(s),
                               abstract_qubits(s), s.c_pad};

    PhysicalEstimate& p = a.physical;
    p.board = board_geometry(s, factory, hw);
    p.physical_qubits = static_cast<double>(p.board.logical_qubit_total) *
                        static_cast<double>(physical_qubits_per_logical(params.d2));
    p.runtime_per_run = static_cast<double>(a.abstract.lookup_additions) *
                        lookup_addition_time(s, params.d2, hw).total;
    p.cycles = p.runtime_per_run / hw.cycle_time_s;

    ErrorBudget& e = a.errors;
    e.deviation = total_deviation(s);
    e.approximation_error = approximation_error(e.deviation);
    e.topological_error =
        topological_error(static_cast<double>(p.board.logical_qubit_total),
                          p.board.nondistill_fraction(), p.cycles, params.d2, hw.gate_error);
    e.distillation_error =
        distillation_error(a.abstract.toffoli_count * factory.states_per_toffoli(), factory);
    e.postprocessing_failure = kPostprocessingFailure;
    e.retry_risk = retry_risk(e.topological_error, e.distillation_error, e.approximation_error,
                              e.postprocessing_failure);

    p.retry_risk = e.retry_risk;
    p.volume_per_run = p.physical_qubits / 1e6 * p.runtime_per_run / kSecondsPerDay;
    p.expected_volume = p.retry_risk < 1.0 ? p.volume_per_run / (1.0 - p.retry_risk)
                                           : std::numeric_limits<double>::infinity();
    return a;
}

PhysicalEstimate physical_estimate(int n, std::int64_t n_e, const CostParams& params,
                                   const FactoryTable& factories, const PhysicalAssumptions& hw) {
    return assess(n, n_e, params, factories, hw).physical;
}

}  // namespace shorcost
