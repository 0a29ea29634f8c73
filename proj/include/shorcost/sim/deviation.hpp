#pragma once

#include <cstdint>

namespace shorcost::sim {

/// Trial harness for coset + runway additions: a coset register of
/// n + c_pad bits with runways every c_sep bits receives `additions` lookup
/// additions of canonical constants.
struct DeviationConfig {
    int n = 8;
    int c_sep = 4;
    int c_pad = 4;
    int additions = 10;
    int address_width = 3;
    std::uint64_t seed = 1;
};

struct DeviationResult {
    std::int64_t trials = 0;
    std::int64_t corrupted = 0;
    double fraction = 0;
    double bound = 0;
    bool operator==(const DeviationResult&) const = default;
};

/// additions * pieces * 2^-c_pad, saturated at 1.
double addition_deviation_bound(const DeviationConfig& config);

/// Modulus used by the harness: the largest odd n-bit value.
std::uint64_t deviation_modulus(int n);

/// Trials run in parallel; trial t draws from its own seed, so the result
/// equals the serial one.
DeviationResult measure_empirical_deviation(const DeviationConfig& config, std::int64_t trials);
DeviationResult measure_empirical_deviation_serial(const DeviationConfig& config,
                                                   std::int64_t trials);

}  // namespace shorcost::sim
