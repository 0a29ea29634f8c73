#pragma once

#include <cstdint>

#include "shorcost/abstract_cost.hpp"

namespace shorcost {

/// Failure probability of the classical post-processing given a correct run.
inline constexpr double kPostprocessingFailure = 0.01;

/// Reference physical gate error at which the suppression law is stated.
inline constexpr double kReferenceGateError = 1e-3;

struct ErrorBudget {
    double deviation = 0;
    double approximation_error = 0;
    double topological_error = 0;
    double distillation_error = 0;
    double postprocessing_failure = kPostprocessingFailure;
    double retry_risk = 0;
};

double deviation_per_addition(int n, int c_sep, int c_pad);

/// Deviation of the whole exponentiation, saturated at 1.
double total_deviation(const ArithmeticShape& s);
double total_deviation(int n, std::int64_t n_e, const CostParams& params);

/// Trace-distance bound 2 sqrt(deviation), saturated at 1.
double approximation_error(double deviation);

/// 10^-ceil(d/2 + 1) at the reference gate error of 1e-3.
double logical_error_per_qubit_cycle(int d);

/// Same law scaled to another gate error: one factor of (p / 1e-3) per
/// half-distance step. Equals the unscaled form at p = 1e-3.
double logical_error_per_qubit_cycle(int d, double gate_error);

double topological_error(double logical_qubits, double nondistill_fraction, double cycles,
                         int d2, double gate_error = kReferenceGateError);

class FactoryModel;

/// Distillation failure over `magic_state_count` states.
double distillation_error(double magic_state_count, const FactoryModel& factory);

/// Combines independent failure sources with the post-processing floor.
double retry_risk(double topological, double distillation, double approximation,
                  double postprocessing = kPostprocessingFailure);

struct ScaledVolume {
    double volume = 0;
    bool outside_validity = false;  // p outside [1e-5, 3e-3]
};

/// Rescales an expected volume at 0.1% gate error to gate error `p`.
ScaledVolume volume_scaling_rule(double v_ref, double p);

}  // namespace shorcost
