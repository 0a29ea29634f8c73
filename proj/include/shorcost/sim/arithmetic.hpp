#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shorcost/sim/circuit.hpp"

namespace shorcost::sim {

/// Exact counted-Toffoli constants of the constructions below. Leading-term
/// claims are tested as equalities against these.
namespace manifest {
/// n-bit Cuccaro adder with carry-out: 2n.
inline constexpr int kAdderPerBit = 2;
inline constexpr int kAdderOffset = 0;
/// In-place n-bit adder modulo 2^n: 2n - 2.
inline constexpr int kModAdderOffset = -2;
/// Controlled adder via an AND register: n to compute, 2n to add, n to clear.
inline constexpr int kControlledAdderPerBit = 4;
/// Unary-iteration lookup over w address bits: 2^w - 2 (uncompute is measurement based).
inline constexpr int kLookupOffset = -2;
/// Adding one carry qubit into an m-bit runway: m - 1.
inline constexpr int kIncrementOffset = -1;
}  // namespace manifest

/// b += a with carry-out XORed into `carry_out` (if >= 0). `anc` must be |0>.
/// Exactly 2n counted Toffolis.
void emit_add(Circuit& c, std::span<const int> a, std::span<const int> b, int anc,
              int carry_out = -1);

/// b += a mod 2^n. Exactly 2(n-1) counted Toffolis.
void emit_add_mod(Circuit& c, std::span<const int> a, std::span<const int> b, int anc);

/// b += ctrl * a with carry-out. `ands` needs n zeroed qubits. Exactly 4n Toffolis.
void emit_controlled_add(Circuit& c, int ctrl, std::span<const int> a, std::span<const int> b,
                         std::span<const int> ands, int anc, int carry_out = -1);

/// b += a where the carry-out is absorbed into `runway` (m bits, mod 2^m)
/// instead of propagating further. 2n + m - 1 counted Toffolis.
void emit_add_into_runway(Circuit& c, std::span<const int> a, std::span<const int> b, int anc,
                          std::span<const int> runway, std::span<const int> inc_anc);

/// target += ctrl mod 2^m using m - 1 zeroed ancillae; m - 1 counted Toffolis.
void emit_increment(Circuit& c, int ctrl, std::span<const int> target, std::span<const int> anc);

/// out ^= table[address] by unary iteration. `ands` needs w - 1 zeroed
/// qubits. Missing table entries read as zero.
void emit_lookup(Circuit& c, std::span<const std::uint64_t> table, std::span<const int> address,
                 std::span<const int> out, std::span<const int> ands, bool counted = true);

/// Registers "a" (n), "b" (n + 1, top bit is the carry), "anc"; the
/// controlled form adds "ctrl" and "ands" (n). Computes b = a + b mod 2^(n+1).
Circuit build_cuccaro_adder(int n, bool controlled);

/// Registers "address" (w), "target" (m), "lookup" (m), "ands", "anc".
/// Adds table[address] into target modulo 2^m, then clears the lookup
/// register with an uncounted unlookup.
Circuit build_lookup_addition(std::span<const std::uint64_t> table, int address_width,
                              int target_width);

}  // namespace shorcost::sim
