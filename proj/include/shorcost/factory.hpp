#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shorcost/abstract_cost.hpp"

namespace shorcost {

/// A magic state factory at one (d1, d2) setting.
///
/// Footprints are in level-2 logical qubits. `cycles_per_state` is the
/// surface code cycles one factory needs per output state.
class FactoryModel {
public:
    FactoryKind kind = FactoryKind::CCZ;
    int d1 = 0;
    int d2 = 0;
    double error_per_state = 0;
    int footprint_w = 0;
    int footprint_h = 0;
    double cycles_per_state = 0;

    /// Magic states consumed per Toffoli gate.
    int states_per_toffoli() const { return kind == FactoryKind::CCZ ? 1 : 4; }

    bool operator==(const FactoryModel&) const = default;
};

/// Lookup table of factory models keyed by (kind, d1, d2).
class FactoryTable {
public:
    static constexpr int kFormatVersion = 1;

    FactoryTable() = default;
    explicit FactoryTable(std::vector<FactoryModel> entries);

    /// Built-in approximation over d1 in {15..23} and d2 in {25..51}, odd.
    /// Anchored at CCZ(d1=17, d2=27): 2.13e-11 per state, 15x8 footprint.
    static FactoryTable builtin(double gate_error = 1e-3);

    static FactoryTable load_csv(const std::string& path);
    static FactoryTable parse_csv(std::istream& in);
    void write_csv(std::ostream& out) const;

    /// Throws UnsupportedError when the table has no entry.
    const FactoryModel& at(FactoryKind kind, int d1, int d2) const;
    bool contains(FactoryKind kind, int d1, int d2) const;

    const std::vector<FactoryModel>& entries() const { return entries_; }

private:
    const FactoryModel* find(FactoryKind kind, int d1, int d2) const;

    std::vector<FactoryModel> entries_;
    // dense index over odd distances 3..(2*kSpan+1); -1 for missing
    static constexpr int kSpan = 64;
    std::vector<int> index_;
};

/// Per-state CCZ error at (d1, d2) used by the built-in table.
double builtin_ccz_error_per_state(int d1, int d2, double gate_error = 1e-3);

}  // namespace shorcost
