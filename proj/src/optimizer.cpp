#include "shorcost/optimizer.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include <omp.h>

namespace shorcost {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Sentinel that loses against any evaluated point.
EstimateReport worst_report(const ProblemInstance& problem) {
    EstimateReport r;
    r.problem = problem;
    r.objective = kInfinity;
    r.physical.physical_qubits = kInfinity;
    r.physical.runtime_per_run = kInfinity;
    r.params = CostParams{std::numeric_limits<int>::max(), 0, 0, 0, 0, 0, FactoryKind::T};
    return r;
}

bool try_evaluate(const ProblemInstance& problem, const CostParams& params,
                  const EstimationContext& ctx, EstimateReport& out) {
    if (!ctx.factories.contains(params.factory, params.d1, params.d2) ||
        problem.n_e < params.c_exp) {
        return false;
    }
    out = evaluate(problem, params, ctx);
    return true;
}

std::string dominating_component(const ErrorBudget& e) {
    std::string name = "topological";
    double worst = e.topological_error;
    if (e.distillation_error > worst) {
        name = "distillation";
        worst = e.distillation_error;
    }
    if (e.approximation_error > worst) {
        name = "approximation";
    }
    return name;
}

[[noreturn]] void throw_infeasible(const ProblemInstance& problem, std::span<const CostParams> grid,
                                   const EstimationContext& ctx) {
    // Report against the point with the smallest physical footprint that
    // could be evaluated at all.
    EstimateReport probe = worst_report(problem);
    bool any = false;
    for (const CostParams& params : grid) {
        EstimateReport r;
        if (try_evaluate(problem, params, ctx, r)) {
            if (!any || r.errors.topological_error + r.errors.distillation_error <
                            probe.errors.topological_error + probe.errors.distillation_error) {
                probe = r;
                any = true;
            }
        }
    }
    if (!any) {
        throw InfeasibleError("no grid point is supported by the factory table", "factory-table");
    }
    const std::string component = dominating_component(probe.errors);
    throw InfeasibleError("every parameter point fails with certainty (n=" +
                              std::to_string(problem.n) + ", n_e=" + std::to_string(problem.n_e) +
                              "); dominating error component: " + component,
                          component);
}

}  // namespace

EstimationContext EstimationContext::with_assumptions(const PhysicalAssumptions& hw) {
    return EstimationContext{FactoryTable::builtin(hw.gate_error), hw};
}

std::vector<CostParams> enumerate_grid() {
    std::vector<CostParams> grid;
    grid.reserve(kGridSize);
    for (int d1 = 15; d1 <= 23; d1 += 2) {
        for (int d2 = 25; d2 <= 51; d2 += 2) {
            for (int delta_off = 2; delta_off <= 10; ++delta_off) {
                for (int c_mul = 4; c_mul <= 6; ++c_mul) {
                    for (int c_exp = 4; c_exp <= 6; ++c_exp) {
                        for (int c_sep : {512, 768, 1024, 1536, 2048}) {
                            for (FactoryKind f : {FactoryKind::CCZ, FactoryKind::T}) {
                                grid.push_back(CostParams{d1, d2, delta_off, c_exp, c_mul, c_sep, f});
                            }
                        }
                    }
                }
            }
        }
    }
    return grid;
}

double skewed_volume(double physical_qubits, double runtime, double retry_risk) {
    if (retry_risk >= 1.0) {
        return kInfinity;
    }
    return std::pow(physical_qubits, 1.2) * runtime / (1.0 - retry_risk);
}

EstimateReport evaluate(const ProblemInstance& problem, const CostParams& params,
                        const EstimationContext& ctx) {
    const Assessment a = assess(problem.n, problem.n_e, params, ctx.factories, ctx.hw);
    EstimateReport r;
    r.problem = problem;
    r.params = params;
    r.abstract = a.abstract;
    r.errors = a.errors;
    r.physical = a.physical;
    r.objective = skewed_volume(a.physical.physical_qubits, a.physical.runtime_per_run,
                                a.errors.retry_risk);
    r.flagged = a.errors.retry_risk >= 0.5;
    return r;
}

bool better(const EstimateReport& a, const EstimateReport& b) {
    const auto key = [](const EstimateReport& r) {
        return std::make_tuple(r.objective, r.physical.physical_qubits, r.physical.runtime_per_run,
                               r.params);
    };
    return key(a) < key(b);
}

EstimateReport optimize_serial(const ProblemInstance& problem, std::span<const CostParams> grid,
                               const EstimationContext& ctx) {
    EstimateReport best = worst_report(problem);
    EstimateReport candidate;
    for (const CostParams& params : grid) {
        if (try_evaluate(problem, params, ctx, candidate) && better(candidate, best)) {
            best = candidate;
        }
    }
    if (std::isinf(best.objective)) {
        throw_infeasible(problem, grid, ctx);
    }
    return best;
}

EstimateReport optimize(const ProblemInstance& problem, std::span<const CostParams> grid,
                        const EstimationContext& ctx) {
    EstimateReport best = worst_report(problem);
    const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel
    {
        EstimateReport local = worst_report(problem);
        EstimateReport candidate;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            if (try_evaluate(problem, grid[static_cast<std::size_t>(i)], ctx, candidate) &&
                better(candidate, local)) {
                local = candidate;
            }
        }
        // `better` is a strict total order, so the merge order cannot matter.
#pragma omp critical(shorcost_optimize_merge)
        {
            if (better(local, best)) {
                best = local;
            }
        }
    }
    if (std::isinf(best.objective)) {
        throw_infeasible(problem, grid, ctx);
    }
    return best;
}

EstimateReport optimize(const ProblemInstance& problem, const EstimationContext& ctx) {
    static const std::vector<CostParams> grid = enumerate_grid();
    return optimize(problem, grid, ctx);
}

EstimateReport optimize_serial(const ProblemInstance& problem, const EstimationContext& ctx) {
    static const std::vector<CostParams> grid = enumerate_grid();
    return optimize_serial(problem, grid, ctx);
}

ProblemInstance custom_instance(ProblemKind kind, int n, int n_e) {
    if (n < 16 || n_e < 1) {
        throw std::invalid_argument("custom instance needs n >= 16 and n_e >= 1");
    }
    ProblemInstance p;
    p.kind = kind;
    switch (kind) {
    case ProblemKind::RsaViaShortDlog: p.family = Family::Rsa; break;
    case ProblemKind::SchnorrGroupDlog: p.family = Family::DlpSchnorr; break;
    case ProblemKind::SafePrimeShortDlog: p.family = Family::DlpSafeShort; break;
    case ProblemKind::SafePrimeFullDlog: p.family = Family::DlpSafeFull; break;
    case ProblemKind::KnownOrderShorDlog: p.family = Family::DlpSafeShor; break;
    }
    p.n = n;
    p.n_e = n_e;
    return p;
}

std::vector<EstimateReport> make_table(Family family, const EstimationContext& ctx) {
    std::vector<EstimateReport> rows;
    for (int n : catalog_sizes()) {
        rows.push_back(optimize(make_instance(family, n), ctx));
    }
    return rows;
}

}  // namespace shorcost
