#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "shorcost/sim/circuit.hpp"
#include "shorcost/sim/runway.hpp"

namespace shorcost::sim {

struct ModexpParams {
    int n_e = 8;     // exponent bits
    int c_exp = 2;   // exponent window
    int c_mul = 3;   // multiplication window
    int c_pad = 8;   // coset padding and runway length
    int c_sep = 64;  // runway spacing; >= n means no runways
};

/// Windowed modular exponentiation as one reversible circuit. The exponent
/// lives in the classical record (bit i is exponent bit i); accumulator and
/// workspace are coset registers with runways.
struct ModexpCircuit {
    Circuit circuit;
    std::uint64_t g = 0;
    std::uint64_t modulus = 0;
    int n = 0;
    ModexpParams params;
    RunwayLayout layout;
    std::vector<int> x;  // holds 1 at the start
    std::vector<int> y;  // holds 0 at the start
    std::vector<int> result;  // x or y, whichever holds g^e at the end
    std::int64_t lookup_additions = 0;
};

ModexpCircuit build_windowed_modexp(std::uint64_t g, std::uint64_t modulus, int n,
                                    const ModexpParams& params);

/// Random choices standing in for the superposed coset offsets and runways.
struct ModexpOffsets {
    std::uint64_t coset_x = 0;
    std::uint64_t coset_y = 0;
    std::vector<std::uint64_t> runways_x;
    std::vector<std::uint64_t> runways_y;
};

ModexpOffsets sample_offsets(const ModexpCircuit& m, std::mt19937_64& rng);

/// Input state for exponent `e` (0 <= e < 2^n_e) at the given offsets.
BasisState prepare_input(const ModexpCircuit& m, std::uint64_t e, const ModexpOffsets& offsets);

/// Measures the result register and decodes it classically (runway removal, mod N).
std::uint64_t decode_result(const ModexpCircuit& m, const BasisState& state);

/// Runs the circuit for one exponent and one offset sample.
std::uint64_t run_modexp(const ModexpCircuit& m, std::uint64_t e, const ModexpOffsets& offsets);

/// Analytic deviation bound for one run: every lookup addition may carry
/// out of each of its pieces' runways or padding with probability at most
/// 2^-c_pad, plus the chance a runway insertion borrows past the register top.
double modexp_deviation_bound(const ModexpCircuit& m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t modulus);

}  // namespace shorcost::sim
