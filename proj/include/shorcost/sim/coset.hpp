#pragma once

#include <cstdint>
#include <vector>

namespace shorcost::sim {

/// Coset encoding of k mod N: the uniform population {jN + k : 0 <= j < 2^c_pad}.
struct CosetRegister {
    int n = 0;  // ceil(lg N)
    int c_pad = 0;
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> population;  // equally weighted, ascending

    int width() const { return n + c_pad; }
};

/// Bits needed to hold values below N.
int modulus_bits(std::uint64_t modulus);

CosetRegister coset_encode(std::uint64_t k, std::uint64_t modulus, int c_pad);

/// One member jN + k of the encoding.
std::uint64_t coset_member(std::uint64_t k, std::uint64_t modulus, std::uint64_t j);

std::uint64_t coset_decode(std::uint64_t value, std::uint64_t modulus);

}  // namespace shorcost::sim
