#include "shorcost/sim/factor.hpp"

#include <cmath>
#include <string>

namespace shorcost::sim {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (static_cast<u128>(r) * r > v) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

FactorPair recover_factors_from_sum(std::uint64_t d, std::uint64_t modulus) {
    if (d == 0 || modulus == 0) {
        throw std::invalid_argument("d and N must be positive");
    }
    const u128 d2 = static_cast<u128>(d) * d;
    const u128 four_n = static_cast<u128>(modulus) * 4;
    if (d2 < four_n) {
        throw std::invalid_argument("d^2 < 4N: no real roots");
    }
    const u128 disc = d2 - four_n;
    if (disc > UINT64_MAX) {
        throw std::invalid_argument("discriminant exceeds 64 bits");
    }
    const std::uint64_t s = isqrt(static_cast<std::uint64_t>(disc));
    if (static_cast<u128>(s) * s != disc || (d - s) % 2 != 0) {
        throw PostprocessingFailure("no integer roots for d=" + std::to_string(d) +
                                    ", N=" + std::to_string(modulus));
    }
    const FactorPair f{(d - s) / 2, (d + s) / 2};
    if (static_cast<u128>(f.p) * f.q != modulus) {
        throw PostprocessingFailure("roots do not multiply to N");
    }
    return f;
}

}  // namespace shorcost::sim
