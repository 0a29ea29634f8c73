#pragma once

#include <string>

namespace shorcost {

/// Hardware assumptions shared by the error and physical models.
struct PhysicalAssumptions {
    double cycle_time_s = 1e-6;     // one surface code cycle
    double reaction_time_s = 10e-6;  // measure, decode, and feed forward
    double gate_error = 1e-3;       // physical gate error rate
    double misc_time_s = 1e-3;      // per lookup addition: unlookup, row shuffling

    bool operator==(const PhysicalAssumptions&) const = default;
};

/// Reads a JSON object with any of the keys cycle_time_us, reaction_time_us,
/// gate_error, misc_time_ms. Missing keys keep their defaults.
PhysicalAssumptions load_assumptions(const std::string& path);

}  // namespace shorcost
