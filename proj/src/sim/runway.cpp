#include "shorcost/sim/runway.hpp"

#include <algorithm>
#include <stdexcept>

#include "shorcost/sim/arithmetic.hpp"

namespace shorcost::sim {

namespace {

std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::uint64_t extract(std::uint64_t v, int offset, int width) {
    return offset >= 64 ? 0 : (v >> offset) & low_mask(width);
}

void require_packable(const RunwayLayout& layout) {
    if (layout.total_width() > 64) {
        throw std::invalid_argument("runway register wider than 64 bits");
    }
}

std::span<const int> slice(std::span<const int> v, int offset, int width) {
    return v.subspan(static_cast<std::size_t>(offset), static_cast<std::size_t>(width));
}

}  // namespace

int RunwayLayout::piece_main_bits(int i) const {
    return i < pieces() - 1 ? c_sep : main_width - (pieces() - 1) * c_sep;
}

int RunwayLayout::segment_width(int i) const {
    return piece_main_bits(i) + (i == pieces() - 1 ? top_extra : 0);
}

int RunwayLayout::segment_offset(int i) const { return i * (c_sep + c_pad); }

int RunwayLayout::runway_offset(int i) const { return i * (c_sep + c_pad) + c_sep; }

int RunwayLayout::total_width() const { return value_width() + (pieces() - 1) * c_pad; }

RunwayLayout make_runway_layout(int main_width, int c_sep, int c_pad, int top_extra) {
    if (main_width < 1 || c_sep < 1 || c_pad < 0 || top_extra < 0) {
        throw std::invalid_argument("runway layout needs main_width, c_sep >= 1 and c_pad >= 0");
    }
    return RunwayLayout{main_width, c_sep, c_pad, top_extra};
}

std::uint64_t insert_runways(const RunwayLayout& layout, std::uint64_t value,
                             std::span<const std::uint64_t> runway_values) {
    require_packable(layout);
    const int p = layout.pieces();
    const int w = layout.value_width();
    if ((value & ~low_mask(w)) != 0) {
        throw std::invalid_argument("value wider than the register");
    }
    if (runway_values.size() != static_cast<std::size_t>(p - 1)) {
        throw std::invalid_argument("need one runway value per runway");
    }
    // Pieces hold value - sum(r_i 2^((i+1) c_sep)) so the total is unchanged.
    std::uint64_t adjusted = value;
    for (int i = 0; i + 1 < p; ++i) {
        const std::uint64_t r = runway_values[static_cast<std::size_t>(i)];
        if ((r & ~low_mask(layout.c_pad)) != 0) {
            throw std::invalid_argument("runway value wider than c_pad");
        }
        adjusted -= r << ((i + 1) * layout.c_sep);
    }
    adjusted &= low_mask(w);

    std::uint64_t packed = 0;
    for (int i = 0; i < p; ++i) {
        const std::uint64_t seg = extract(adjusted, i * layout.c_sep, layout.segment_width(i));
        packed |= seg << layout.segment_offset(i);
        if (i + 1 < p && layout.c_pad > 0) {
            packed |= runway_values[static_cast<std::size_t>(i)] << layout.runway_offset(i);
        }
    }
    return packed;
}

std::uint64_t remove_runways_classically(const RunwayLayout& layout, std::uint64_t measured) {
    require_packable(layout);
    if ((measured & ~low_mask(layout.total_width())) != 0) {
        throw std::invalid_argument("measurement record has bits beyond the register");
    }
    const int p = layout.pieces();
    std::uint64_t value = 0;
    for (int i = 0; i < p; ++i) {
        value += extract(measured, layout.segment_offset(i), layout.segment_width(i))
                 << (i * layout.c_sep);
        if (i + 1 < p) {
            value += extract(measured, layout.runway_offset(i), layout.c_pad)
                     << ((i + 1) * layout.c_sep);
        }
    }
    return value & low_mask(layout.value_width());
}

void emit_runway_addition(Circuit& c, const RunwayLayout& layout, std::span<const int> reg,
                          std::span<const int> addend, int anc, std::span<const int> inc_anc) {
    if (reg.size() != static_cast<std::size_t>(layout.total_width()) ||
        addend.size() != static_cast<std::size_t>(layout.main_width)) {
        throw std::invalid_argument("runway addition operand widths do not match the layout");
    }
    const int p = layout.pieces();
    for (int i = 0; i < p; ++i) {
        const int bits = layout.piece_main_bits(i);
        const auto a = slice(addend, i * layout.c_sep, bits);
        const auto b = slice(reg, layout.segment_offset(i), bits);
        const auto runway = i + 1 < p ? slice(reg, layout.runway_offset(i), layout.c_pad)
                                      : slice(reg, layout.segment_offset(i) + bits, layout.top_extra);
        emit_add_into_runway(c, a, b, anc, runway, inc_anc);
    }
}

Circuit build_runway_lookup_addition(std::span<const std::uint64_t> table, int address_width,
                                     const RunwayLayout& layout) {
    Circuit c;
    const auto address = c.add_register("address", address_width);
    const auto reg = c.add_register("register", layout.total_width());
    const auto lookup = c.add_register("lookup", layout.main_width);
    const auto ands = c.add_register("ands", std::max(address_width - 1, 0));
    const auto anc = c.add_register("anc", 1);
    const auto inc = c.add_register("inc", std::max({layout.c_pad, layout.top_extra, 1}) - 1);
    emit_lookup(c, table, address, lookup, ands, true);
    emit_runway_addition(c, layout, reg, lookup, anc[0], inc);
    emit_lookup(c, table, address, lookup, ands, false);
    return c;
}

void emit_fold(Circuit& c, const RunwayLayout& layout, std::span<const int> reg,
               std::span<const int> carries, int anc) {
    const int p = layout.pieces();
    if (carries.size() != static_cast<std::size_t>(p - 1)) {
        throw std::invalid_argument("fold needs one carry qubit per runway");
    }
    if (layout.c_pad == 0) return;
    for (int i = 0; i + 1 < p; ++i) {
        if (layout.segment_width(i + 1) < layout.c_pad) {
            throw std::invalid_argument("piece narrower than its runway cannot absorb it");
        }
        const auto runway = slice(reg, layout.runway_offset(i), layout.c_pad);
        const auto low = slice(reg, layout.segment_offset(i + 1), layout.c_pad);
        emit_add(c, runway, low, anc, carries[static_cast<std::size_t>(i)]);
    }
}

std::vector<std::pair<int, int>> folded_bits(const RunwayLayout& layout, std::span<const int> reg,
                                             std::span<const int> carries) {
    std::vector<std::pair<int, int>> bits;
    const int p = layout.pieces();
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < layout.segment_width(i); ++j) {
            bits.emplace_back(reg[static_cast<std::size_t>(layout.segment_offset(i) + j)],
                              i * layout.c_sep + j);
        }
    }
    for (int i = 0; i + 1 < p; ++i) {
        bits.emplace_back(carries[static_cast<std::size_t>(i)], (i + 1) * layout.c_sep + layout.c_pad);
    }
    return bits;
}

Circuit build_fold(const RunwayLayout& layout) {
    Circuit c;
    const auto reg = c.add_register("register", layout.total_width());
    const auto carries = c.add_register("carry", layout.pieces() - 1);
    const auto anc = c.add_register("anc", 1);
    emit_fold(c, layout, reg, carries, anc[0]);
    return c;
}

}  // namespace shorcost::sim
