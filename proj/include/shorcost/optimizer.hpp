#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shorcost/physical_model.hpp"
#include "shorcost/problem.hpp"

namespace shorcost {

/// Everything besides the problem and the parameter point that an estimate
/// depends on.
struct EstimationContext {
    FactoryTable factories = FactoryTable::builtin();
    PhysicalAssumptions hw{};

    /// Built-in factory table at the assumptions' gate error.
    static EstimationContext with_assumptions(const PhysicalAssumptions& hw);
};

struct EstimateReport {
    ProblemInstance problem;
    CostParams params;
    AbstractCosts abstract;
    ErrorBudget errors;
    PhysicalEstimate physical;
    double objective = 0;
    bool flagged = false;  // retry risk of 50% or more
};

/// Thrown when every grid point has retry risk 1.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, std::string dominating_component)
        : std::runtime_error(what), dominating_component_(std::move(dominating_component)) {}
    const std::string& dominating_component() const { return dominating_component_; }

private:
    std::string dominating_component_;
};

/// Grid cardinalities: 5 d1 x 14 d2 x 9 offsets x 3 c_mul x 3 c_exp x 5 c_sep x 2 factories.
inline constexpr std::size_t kGridSize = 5 * 14 * 9 * 3 * 3 * 5 * 2;

/// All grid points in lexicographic (d1, d2, delta_off, c_mul, c_exp, c_sep, factory) order.
std::vector<CostParams> enumerate_grid();

/// s^1.2 t / (1 - eps); infinite when eps >= 1.
double skewed_volume(double physical_qubits, double runtime, double retry_risk);

/// Evaluates one point; infeasible points get an infinite objective.
EstimateReport evaluate(const ProblemInstance& problem, const CostParams& params,
                        const EstimationContext& ctx);

/// Strict total order used to pick the optimum: objective, then physical
/// qubits, then runtime, then parameters.
bool better(const EstimateReport& a, const EstimateReport& b);

/// OpenMP grid search; identical result to optimize_serial.
EstimateReport optimize(const ProblemInstance& problem, std::span<const CostParams> grid,
                        const EstimationContext& ctx);
EstimateReport optimize(const ProblemInstance& problem, const EstimationContext& ctx);

/// Single-threaded reference search.
EstimateReport optimize_serial(const ProblemInstance& problem, std::span<const CostParams> grid,
                               const EstimationContext& ctx);
EstimateReport optimize_serial(const ProblemInstance& problem, const EstimationContext& ctx);

/// Custom (kind, n, n_e) instance for sizes outside the tables.
ProblemInstance custom_instance(ProblemKind kind, int n, int n_e);

/// One optimized row per catalog size of the family.
std::vector<EstimateReport> make_table(Family family, const EstimationContext& ctx);

}  // namespace shorcost
