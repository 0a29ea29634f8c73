#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "shorcost/sim/circuit.hpp"

namespace shorcost::sim {

/// Piecewise register with oblivious carry runways.
///
/// Qubit order is piece 0 (c_sep bits), runway 0 (c_pad bits), piece 1, ...,
/// top piece. Runway i has the same weight as the low bits of piece i + 1.
/// `top_extra` bits (coset padding) sit above the top piece's main bits.
struct RunwayLayout {
    int main_width = 0;
    int c_sep = 1;
    int c_pad = 0;
    int top_extra = 0;

    int pieces() const { return (main_width + c_sep - 1) / c_sep; }
    int piece_main_bits(int i) const;
    /// Width of piece i's segment, counting top_extra for the top piece.
    int segment_width(int i) const;
    int segment_offset(int i) const;
    int runway_offset(int i) const;  // i < pieces() - 1
    int total_width() const;
    /// Bits of the represented value, main_width + top_extra.
    int value_width() const { return main_width + top_extra; }
};

RunwayLayout make_runway_layout(int main_width, int c_sep, int c_pad, int top_extra = 0);

/// Packs `value` into layout form with runway i initialised to
/// `runway_values[i]` (compensated in the pieces above, so the represented
/// value is unchanged). Needs total_width() <= 64.
std::uint64_t insert_runways(const RunwayLayout& layout, std::uint64_t value,
                             std::span<const std::uint64_t> runway_values);

/// Classical post-processing of measured register bits: represented value
/// modulo 2^value_width(). Throws on bits beyond total_width().
std::uint64_t remove_runways_classically(const RunwayLayout& layout, std::uint64_t measured);

/// reg += addend piecewise; each piece's carry terminates in its runway
/// (top piece: in top_extra). `addend` has main_width qubits.
void emit_runway_addition(Circuit& c, const RunwayLayout& layout, std::span<const int> reg,
                          std::span<const int> addend, int anc, std::span<const int> inc_anc);

/// Registers "address", "register", "lookup", "ands", "anc", "inc".
Circuit build_runway_lookup_addition(std::span<const std::uint64_t> table, int address_width,
                                     const RunwayLayout& layout);

/// Adds each runway into the low c_pad bits of the next piece, with the
/// carry landing in `carries[i]`. Reverse the emitted range to unfold.
void emit_fold(Circuit& c, const RunwayLayout& layout, std::span<const int> reg,
               std::span<const int> carries, int anc);

/// Iterable qubits of a folded register with their weight exponents: main
/// bits, padding bits, then one carry per runway.
std::vector<std::pair<int, int>> folded_bits(const RunwayLayout& layout, std::span<const int> reg,
                                             std::span<const int> carries);

/// Registers "register", "carry" (pieces - 1), "anc"; fold only.
Circuit build_fold(const RunwayLayout& layout);

}  // namespace shorcost::sim
