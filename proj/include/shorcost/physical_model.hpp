#pragma once

#include <cstdint>

#include "shorcost/abstract_cost.hpp"
#include "shorcost/assumptions.hpp"
#include "shorcost/error_budget.hpp"
#include "shorcost/factory.hpp"

namespace shorcost {

/// Rows of the operating area outside the factories: ripple-carry sweep (3),
/// AutoCCZ fixup (6), routing (8).
inline constexpr int kOperatingRows = 17;

std::int64_t physical_qubits_per_logical(int d);

/// Logical-qubit board for the piecewise lattice surgery layout.
struct BoardLayout {
    int pieces = 0;
    int width_per_piece = 0;
    int height = 0;
    int factories_per_piece = 0;
    std::int64_t logical_qubit_total = 0;
    std::int64_t factory_area = 0;  // logical qubits covered by factories

    double nondistill_fraction() const {
        return 1.0 - static_cast<double>(factory_area) / static_cast<double>(logical_qubit_total);
    }
};

int factories_needed(const FactoryModel& factory, const PhysicalAssumptions& hw);

BoardLayout board_geometry(const ArithmeticShape& s, const FactoryModel& factory,
                           const PhysicalAssumptions& hw = {});

struct LookupAdditionTime {
    double lookup = 0;
    double addition = 0;
    double misc = 0;
    double total = 0;
};

LookupAdditionTime lookup_addition_time(const ArithmeticShape& s, int d2,
                                        const PhysicalAssumptions& hw = {});

/// Seconds for the whole exponentiation.
double total_runtime(const ArithmeticShape& s, int d2, const PhysicalAssumptions& hw = {});
double total_runtime(int n, std::int64_t n_e, const CostParams& params,
                     const PhysicalAssumptions& hw = {});

struct PhysicalEstimate {
    BoardLayout board;
    double physical_qubits = 0;
    double runtime_per_run = 0;  // seconds
    double cycles = 0;
    double retry_risk = 0;
    double volume_per_run = 0;   // megaqubitdays
    double expected_volume = 0;  // megaqubitdays, infinite when retry_risk == 1
};

/// Full physical assessment of one parameter point.
struct Assessment {
    AbstractCosts abstract;
    ErrorBudget errors;
    PhysicalEstimate physical;
};

Assessment assess(int n, std::int64_t n_e, const CostParams& params, const FactoryTable& factories,
                  const PhysicalAssumptions& hw = {});

PhysicalEstimate physical_estimate(int n, std::int64_t n_e, const CostParams& params,
                                   const FactoryTable& factories,
                                   const PhysicalAssumptions& hw = {});

}  // namespace shorcost
