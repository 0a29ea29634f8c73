#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shorcost::sim {

enum class GateKind : std::uint8_t { Not, Cnot, Toffoli, ClassicalCtrl };

/// Controls come first; unused slots are -1. A ClassicalCtrl gate flips
/// `target` when classical record bit `cbit` is set.
struct Gate {
    GateKind kind = GateKind::Not;
    int c0 = -1;
    int c1 = -1;
    int target = -1;
    int cbit = -1;
    // Measurement-based uncomputation is excluded from the tallies.
    bool counted = true;

    bool operator==(const Gate&) const = default;
};

struct RegisterSpan {
    int offset = 0;
    int width = 0;
    bool operator==(const RegisterSpan&) const = default;
};

class Circuit {
public:
    /// Allocates `width` fresh qubits and returns their indices, low bit first.
    std::vector<int> add_register(const std::string& name, int width);
    std::vector<int> qubits(const std::string& name) const;
    bool has_register(const std::string& name) const;
    const std::map<std::string, RegisterSpan>& registers() const { return registers_; }

    int num_qubits() const { return num_qubits_; }
    int num_cbits() const { return num_cbits_; }
    void set_num_cbits(int count);

    void x(int target);
    void cx(int control, int target);
    void ccx(int c0, int c1, int target, bool counted = true);
    void classical_x(int cbit, int target);
    void append(const Gate& g);

    /// Appends gates [begin, end) in reverse order. Every gate here is
    /// self-inverse, so this is the inverse of that range. Toffolis get the
    /// `counted` flag given.
    void append_reverse(std::size_t begin, std::size_t end, bool counted);

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    bool operator==(const Circuit&) const = default;

private:
    void check_qubit(int q) const;

    std::vector<Gate> gates_;
    std::map<std::string, RegisterSpan> registers_;
    int num_qubits_ = 0;
    int num_cbits_ = 0;
};

/// Computational basis state plus the classical record.
class BasisState {
public:
    BasisState() = default;
    explicit BasisState(int qubits, int cbits = 0);

    int num_qubits() const { return num_qubits_; }
    int num_cbits() const { return static_cast<int>(record_.size()); }

    bool get(int q) const { return (words_[q >> 6] >> (q & 63)) & 1U; }
    void flip(int q) { words_[q >> 6] ^= std::uint64_t{1} << (q & 63); }
    void set(int q, bool v) {
        if (get(q) != v) flip(q);
    }

    /// Little-endian read/write of up to 64 qubits.
    std::uint64_t read(std::span<const int> qubits) const;
    void write(std::span<const int> qubits, std::uint64_t value);

    bool record(int c) const { return record_[static_cast<std::size_t>(c)] != 0; }
    void set_record(int c, bool v) { record_[static_cast<std::size_t>(c)] = v ? 1 : 0; }

    bool operator==(const BasisState&) const = default;

private:
    int num_qubits_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint8_t> record_;
};

/// Applies the gates in order, in place.
void apply(const Circuit& circuit, BasisState& state);
BasisState simulate(const Circuit& circuit, BasisState state);

struct ResourceCount {
    std::int64_t toffolis = 0;           // counted Toffolis only
    std::int64_t measurement_depth = 0;  // longest chain of dependent counted Toffolis
    std::int64_t uncounted_toffolis = 0;
    bool operator==(const ResourceCount&) const = default;
};

/// Depth convention: every counted Toffoli is one teleported AutoCCZ
/// measurement layer and depends on the last such layer touching any of its
/// qubits. Clifford gates propagate dependencies at zero cost.
ResourceCount count_resources(const Circuit& circuit);

/// Line-based export, one gate per line ("TOFFOLI 0 1 2", "CCTRL c3 5",
/// trailing "~" for uncounted).
std::string to_text(const Circuit& circuit);
Circuit parse_text(std::string_view text);

}  // namespace shorcost::sim
