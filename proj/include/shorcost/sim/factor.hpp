#pragma once

#include <cstdint>
#include <stdexcept>

namespace shorcost::sim {

/// The quadratic p^2 - d p + N = 0 has no integer roots.
class PostprocessingFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FactorPair {
    std::uint64_t p = 0;  // p <= q
    std::uint64_t q = 0;
    bool operator==(const FactorPair&) const = default;
};

/// Roots of p^2 - d p + N = 0 given d = p + q. Throws std::invalid_argument
/// if d^2 < 4N and PostprocessingFailure if the discriminant is not a square.
FactorPair recover_factors_from_sum(std::uint64_t d, std::uint64_t modulus);

/// Largest r with r^2 <= v.
std::uint64_t isqrt(std::uint64_t v);

}  // namespace shorcost::sim
