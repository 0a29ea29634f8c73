#include "shorcost/error_budget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shorcost/factory.hpp"

namespace shorcost {

namespace {

double saturate(double p) { return std::clamp(p, 0.0, 1.0); }

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

}  // namespace

double deviation_per_addition(int n, int c_sep, int c_pad) {
    if (c_pad < 0 || c_sep < 1) {
        throw std::invalid_argument("deviation_per_addition needs c_pad >= 0, c_sep >= 1");
    }
    return std::ldexp(static_cast<double>(n) / c_sep, -c_pad);
}

double total_deviation(const ArithmeticShape& s) {
    return saturate(static_cast<double>(lookup_addition_count(s)) *
                    deviation_per_addition(s.n, s.c_sep, s.c_pad));
}

double total_deviation(int n, std::int64_t n_e, const CostParams& params) {
    return total_deviation(make_shape(n, n_e, params));
}

double approximation_error(double deviation) {
    require_probability(deviation, "deviation");
    return std::min(1.0, 2.0 * std::sqrt(deviation));
}

double logical_error_per_qubit_cycle(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("code distance must be odd and at least 3");
    }
    // ceil(d/2 + 1) for odd d
    return std::pow(10.0, -static_cast<double>((d + 3) / 2));
}

double logical_error_per_qubit_cycle(int d, double gate_error) {
    const double base = logical_error_per_qubit_cycle(d);
    if (gate_error == kReferenceGateError) {
        return base;
    }
    return base * std::pow(gate_error / kReferenceGateError, (d + 1) / 2);
}

double topological_error(double logical_qubits, double nondistill_fraction, double cycles,
                         int d2, double gate_error) {
    if (logical_qubits < 0 || cycles < 0) {
        throw std::invalid_argument("topological_error needs non-negative volume");
    }
    require_probability(nondistill_fraction, "non-distillation fraction");
    return saturate(logical_error_per_qubit_cycle(d2, gate_error) * logical_qubits *
                    nondistill_fraction * cycles);
}

double distillation_error(double magic_state_count, const FactoryModel& factory) {
    if (magic_state_count < 0) {
        throw std::invalid_argument("magic state count must be non-negative");
    }
    return saturate(magic_state_count * factory.error_per_state);
}

double retry_risk(double topological, double distillation, double approximation,
                  double postprocessing) {
    require_probability(topological, "topological error");
    require_probability(distillation, "distillation error");
    require_probability(approximation, "approximation error");
    require_probability(postprocessing, "post-processing failure");
    const double success =
        (1 - topological) * (1 - distillation) * (1 - approximation) * (1 - postprocessing);
    return saturate(1 - success);
}

ScaledVolume volume_scaling_rule(double v_ref, double p) {
    if (!(p > 0.0 && p < 1e-2)) {
        throw std::invalid_argument("gate error must lie in (0, 1e-2) for the scaling rule");
    }
    const double steps = -std::log10(p) - 2.0;
    return ScaledVolume{v_ref / (steps * steps * steps), p < 1e-5 || p > 3e-3};
}

}  // namespace shorcost
