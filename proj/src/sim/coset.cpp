#include "shorcost/sim/coset.hpp"

#include <bit>
#include <stdexcept>

namespace shorcost::sim {

int modulus_bits(std::uint64_t modulus) {
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2");
    }
    return static_cast<int>(std::bit_width(modulus - 1));
}

CosetRegister coset_encode(std::uint64_t k, std::uint64_t modulus, int c_pad) {
    const int n = modulus_bits(modulus);
    if (k >= modulus) {
        throw std::invalid_argument("coset_encode needs k < N");
    }
    if (c_pad < 0 || n + c_pad > 62) {
        throw std::invalid_argument("coset register does not fit in 62 bits");
    }
    CosetRegister r{n, c_pad, modulus, {}};
    const std::uint64_t count = std::uint64_t{1} << c_pad;
    if (c_pad > 24) {
        throw std::invalid_argument("explicit coset population limited to c_pad <= 24");
    }
    r.population.reserve(count);
    for (std::uint64_t j = 0; j < count; ++j) {
        r.population.push_back(j * modulus + k);
    }
    return r;
}

std::uint64_t coset_member(std::uint64_t k, std::uint64_t modulus, std::uint64_t j) {
    if (k >= modulus) {
        throw std::invalid_argument("coset_member needs k < N");
    }
    return j * modulus + k;
}

std::uint64_t coset_decode(std::uint64_t value, std::uint64_t modulus) {
    if (modulus == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    return value % modulus;
}

}  // namespace shorcost::sim
