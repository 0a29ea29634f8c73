#pragma once

#include <string>
#include <vector>

namespace shorcost {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Moduli of the exhaustive windowed-exponentiation check.
const std::vector<unsigned>& modexp_moduli();

SuiteResult verify_adders();
SuiteResult verify_lookup();
SuiteResult verify_coset();
SuiteResult verify_runways();
/// All exponents below 2^8 for every modulus; failures across the sampled
/// coset offsets must stay within the analytic bound.
SuiteResult verify_modexp(int offsets_per_exponent);
SuiteResult verify_deviation(long trials);
/// Simulator-counted Toffolis per lookup addition against the abstract
/// per-addition term, over a matrix of small shapes.
SuiteResult verify_gate_counts();
SuiteResult verify_factor_recovery();
SuiteResult verify_optimizer();

std::vector<SuiteResult> run_all_suites(bool quick);

}  // namespace shorcost
