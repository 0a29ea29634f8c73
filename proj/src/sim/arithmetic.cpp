#include "shorcost/sim/arithmetic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace shorcost::sim {

namespace {

// Cuccaro-Draper-Kutin-Moulton majority / unmajority-and-add blocks.
void maj(Circuit& c, int x, int y, int z) {
    c.cx(z, y);
    c.cx(z, x);
    c.ccx(x, y, z);
}

void uma(Circuit& c, int x, int y, int z) {
    c.ccx(x, y, z);
    c.cx(z, x);
    c.cx(x, y);
}

void require_same_width(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("adder operands must have equal, non-zero width");
    }
}

// Runs the MAJ sweep over bits [0, k), calls `middle` with the carry
// holder, then the UMA sweep back down.
void ripple(Circuit& c, std::span<const int> a, std::span<const int> b, int anc, std::size_t k,
            const std::function<void(int carry)>& middle) {
    for (std::size_t i = 0; i < k; ++i) {
        maj(c, i == 0 ? anc : a[i - 1], b[i], a[i]);
    }
    middle(k == 0 ? anc : a[k - 1]);
    for (std::size_t i = k; i-- > 0;) {
        uma(c, i == 0 ? anc : a[i - 1], b[i], a[i]);
    }
}

}  // namespace

void emit_add(Circuit& c, std::span<const int> a, std::span<const int> b, int anc, int carry_out) {
    require_same_width(a, b);
    ripple(c, a, b, anc, a.size(), [&](int carry) {
        if (carry_out >= 0) c.cx(carry, carry_out);
    });
}

void emit_add_mod(Circuit& c, std::span<const int> a, std::span<const int> b, int anc) {
    require_same_width(a, b);
    const std::size_t n = a.size();
    // the top sum bit only needs parities, not a carry-out
    ripple(c, a, b, anc, n - 1, [&](int carry) {
        c.cx(carry, b[n - 1]);
        c.cx(a[n - 1], b[n - 1]);
    });
}

void emit_controlled_add(Circuit& c, int ctrl, std::span<const int> a, std::span<const int> b,
                         std::span<const int> ands, int anc, int carry_out) {
    require_same_width(a, b);
    if (ands.size() < a.size()) {
        throw std::invalid_argument("controlled adder needs n AND qubits");
    }
    const auto masked = ands.first(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c.ccx(ctrl, a[i], masked[i]);
    emit_add(c, masked, b, anc, carry_out);
    for (std::size_t i = 0; i < a.size(); ++i) c.ccx(ctrl, a[i], masked[i]);
}

void emit_increment(Circuit& c, int ctrl, std::span<const int> target, std::span<const int> anc) {
    const std::size_t m = target.size();
    if (m == 0) return;
    if (anc.size() + 1 < m) {
        throw std::invalid_argument("increment needs m - 1 ancillae");
    }
    // anc[i] = ctrl AND target[0..i]
    for (std::size_t i = 0; i + 1 < m; ++i) {
        c.ccx(i == 0 ? ctrl : anc[i - 1], target[i], anc[i]);
    }
    for (std::size_t i = m - 1; i-- > 0;) {
        c.cx(anc[i], target[i + 1]);
        c.ccx(i == 0 ? ctrl : anc[i - 1], target[i], anc[i], false);
    }
    c.cx(ctrl, target[0]);
}

void emit_add_into_runway(Circuit& c, std::span<const int> a, std::span<const int> b, int anc,
                          std::span<const int> runway, std::span<const int> inc_anc) {
    require_same_width(a, b);
    ripple(c, a, b, anc, a.size(), [&](int carry) { emit_increment(c, carry, runway, inc_anc); });
}

void emit_lookup(Circuit& c, std::span<const std::uint64_t> table, std::span<const int> address,
                 std::span<const int> out, std::span<const int> ands, bool counted) {
    const std::size_t w = address.size();
    if (w == 0 || w > 20) {
        throw std::invalid_argument("lookup address width must be in [1, 20]");
    }
    if (table.size() > (std::size_t{1} << w)) {
        throw std::invalid_argument("lookup table longer than 2^address_width");
    }
    if (ands.size() + 1 < w) {
        throw std::invalid_argument("lookup needs address_width - 1 AND qubits");
    }
    for (std::uint64_t v : table) {
        if (out.size() < 64 && (v >> out.size()) != 0) {
            throw std::invalid_argument("table entry does not fit the output register");
        }
    }

    auto leaf = [&](std::uint64_t index, int control) {
        if (index >= table.size()) return;
        const std::uint64_t v = table[index];
        for (std::size_t j = 0; j < out.size(); ++j) {
            if ((v >> j) & 1U) c.cx(control, out[j]);
        }
    };

    // Node controlled by `control`, splitting on address bit `level`.
    std::function<void(int, int, std::uint64_t)> node = [&](int level, int control,
                                                          std::uint64_t prefix) {
        if (level < 0) {
            leaf(prefix, control);
            return;
        }
        const int bit = address[static_cast<std::size_t>(level)];
        const int t = ands[static_cast<std::size_t>(level)];
        c.x(bit);
        c.ccx(control, bit, t, counted);  // t = control AND NOT bit
        c.x(bit);
        node(level - 1, t, prefix);
        c.cx(control, t);  // t = control AND bit
        node(level - 1, t, prefix | (std::uint64_t{1} << level));
        c.ccx(control, bit, t, false);
    };

    // The top bit needs no AND: it is its own control.
    const int top_level = static_cast<int>(w) - 1;
    const int top = address[static_cast<std::size_t>(top_level)];
    c.x(top);
    node(top_level - 1, top, 0);
    c.x(top);
    node(top_level - 1, top, std::uint64_t{1} << top_level);
}

Circuit build_cuccaro_adder(int n, bool controlled) {
    if (n < 1) {
        throw std::invalid_argument("adder width must be at least 1");
    }
    Circuit c;
    const auto a = c.add_register("a", n);
    const auto b = c.add_register("b", n + 1);
    const auto anc = c.add_register("anc", 1);
    const std::span<const int> low(b.data(), static_cast<std::size_t>(n));
    if (controlled) {
        const auto ctrl = c.add_register("ctrl", 1);
        const auto ands = c.add_register("ands", n);
        emit_controlled_add(c, ctrl[0], a, low, ands, anc[0], b.back());
    } else {
        emit_add(c, a, low, anc[0], b.back());
    }
    return c;
}

Circuit build_lookup_addition(std::span<const std::uint64_t> table, int address_width,
                              int target_width) {
    if (target_width < 1 || target_width > 63) {
        throw std::invalid_argument("target width must be in [1, 63]");
    }
    Circuit c;
    const auto address = c.add_register("address", address_width);
    const auto target = c.add_register("target", target_width);
    const auto lookup = c.add_register("lookup", target_width);
    const auto ands = c.add_register("ands", std::max(address_width - 1, 0));
    const auto anc = c.add_register("anc", 1);
    emit_lookup(c, table, address, lookup, ands, true);
    emit_add_mod(c, lookup, target, anc[0]);
    emit_lookup(c, table, address, lookup, ands, false);
    return c;
}

}  // namespace shorcost::sim
