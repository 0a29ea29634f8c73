#include "shorcost/factory.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "shorcost/error_budget.hpp"
#include "shorcost/problem.hpp"

namespace shorcost {

namespace {

constexpr int kAnchorD1 = 17;
constexpr int kAnchorD2 = 27;
constexpr double kAnchorError = 2.13e-11;  // 6.4% over 3e9 CCZ states
// Share of the anchor error coming from level-1 output error (squared in the
// second distillation round). Calibrated against the RSA table.
constexpr double kLevelOneShare = 2.6e-13;
constexpr double kTErrorDiscount = 40.0;

constexpr int kAnchorFootprintW = 15;
constexpr int kAnchorFootprintH = 8;

int scaled_round(int anchor, int d1) {
    return static_cast<int>(std::floor(static_cast<double>(anchor) * d1 / kAnchorD1 + 0.5));
}

const char* kHeader = "kind,d1,d2,error_per_state,footprint_w,footprint_h,cycles_per_state";

}  // namespace

double builtin_ccz_error_per_state(int d1, int d2, double gate_error) {
    const double level2 = (kAnchorError - kLevelOneShare) *
                          logical_error_per_qubit_cycle(d2, gate_error) /
                          logical_error_per_qubit_cycle(kAnchorD2);
    const double l1 = logical_error_per_qubit_cycle(d1, gate_error) /
                      logical_error_per_qubit_cycle(kAnchorD1);
    return level2 + kLevelOneShare * l1 * l1;
}

FactoryTable::FactoryTable(std::vector<FactoryModel> entries) : entries_(std::move(entries)) {
    index_.assign(2 * kSpan * kSpan, -1);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const FactoryModel& f = entries_[i];
        if (f.d1 < 3 || f.d2 < 3 || f.d1 % 2 == 0 || f.d2 % 2 == 0 || f.d1 / 2 >= kSpan ||
            f.d2 / 2 >= kSpan) {
            throw std::invalid_argument("factory table entry has an invalid code distance");
        }
        if (f.footprint_w <= 0 || f.footprint_h <= 0 || f.cycles_per_state <= 0 ||
            f.error_per_state < 0 || f.error_per_state > 1) {
            throw std::invalid_argument("factory table entry has an invalid field");
        }
        const int slot = (static_cast<int>(f.kind) * kSpan + f.d1 / 2) * kSpan + f.d2 / 2;
        index_[slot] = static_cast<int>(i);
    }
}

FactoryTable FactoryTable::builtin(double gate_error) {
    std::vector<FactoryModel> out;
    for (FactoryKind kind : {FactoryKind::CCZ, FactoryKind::T}) {
        for (int d1 = 15; d1 <= 23; d1 += 2) {
            for (int d2 = 25; d2 <= 51; d2 += 2) {
                FactoryModel f;
                f.kind = kind;
                f.d1 = d1;
                f.d2 = d2;
                f.footprint_w = scaled_round(kAnchorFootprintW, d1);
                f.footprint_h = scaled_round(kAnchorFootprintH, d1);
                const double ccz_cycles = 5.5 * d1 + 1.5 * d2;
                const double ccz_error = builtin_ccz_error_per_state(d1, d2, gate_error);
                if (kind == FactoryKind::CCZ) {
                    f.cycles_per_state = ccz_cycles;
                    f.error_per_state = std::min(1.0, ccz_error);
                } else {
                    f.cycles_per_state = ccz_cycles / 2;
                    f.error_per_state = std::min(1.0, ccz_error / kTErrorDiscount);
                }
                out.push_back(f);
            }
        }
    }
    return FactoryTable(std::move(out));
}

FactoryTable FactoryTable::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open factory table '" + path + "'");
    }
    return parse_csv(in);
}

FactoryTable FactoryTable::parse_csv(std::istream& in) {
    std::string line;
    bool header_seen = false;
    bool version_seen = false;
    std::vector<FactoryModel> entries;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            int version = 0;
            if (std::sscanf(line.c_str(), "# shorcost factory table v%d", &version) == 1) {
                if (version != kFormatVersion) {
                    throw std::runtime_error("unsupported factory table version " +
                                             std::to_string(version));
                }
                version_seen = true;
            }
            continue;
        }
        if (!header_seen) {
            if (line != kHeader) {
                throw std::runtime_error("factory table header mismatch");
            }
            header_seen = true;
            continue;
        }
        std::istringstream fields(line);
        std::string kind;
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(fields, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 7) {
            throw std::runtime_error("factory table line " + std::to_string(line_no) +
                                     ": expected 7 columns");
        }
        try {
            FactoryModel f;
            f.kind = parse_factory_kind(cells[0]);
            f.d1 = std::stoi(cells[1]);
            f.d2 = std::stoi(cells[2]);
            f.error_per_state = std::stod(cells[3]);
            f.footprint_w = std::stoi(cells[4]);
            f.footprint_h = std::stoi(cells[5]);
            f.cycles_per_state = std::stod(cells[6]);
            entries.push_back(f);
        } catch (const std::logic_error& e) {
            throw std::runtime_error("factory table line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    if (!version_seen || !header_seen) {
        throw std::runtime_error("factory table is missing its version line or header");
    }
    return FactoryTable(std::move(entries));
}

void FactoryTable::write_csv(std::ostream& out) const {
    out << "# shorcost factory table v" << kFormatVersion << '\n' << kHeader << '\n';
    char buf[64];
    for (const FactoryModel& f : entries_) {
        std::snprintf(buf, sizeof buf, "%.17g", f.error_per_state);
        out << to_string(f.kind) << ',' << f.d1 << ',' << f.d2 << ',' << buf << ','
            << f.footprint_w << ',' << f.footprint_h << ',';
        std::snprintf(buf, sizeof buf, "%.17g", f.cycles_per_state);
        out << buf << '\n';
    }
}

const FactoryModel* FactoryTable::find(FactoryKind kind, int d1, int d2) const {
    if (index_.empty() || d1 < 3 || d2 < 3 || d1 % 2 == 0 || d2 % 2 == 0 || d1 / 2 >= kSpan ||
        d2 / 2 >= kSpan) {
        return nullptr;
    }
    const int slot = index_[(static_cast<int>(kind) * kSpan + d1 / 2) * kSpan + d2 / 2];
    return slot < 0 ? nullptr : &entries_[static_cast<std::size_t>(slot)];
}

bool FactoryTable::contains(FactoryKind kind, int d1, int d2) const {
    return find(kind, d1, d2) != nullptr;
}

const FactoryModel& FactoryTable::at(FactoryKind kind, int d1, int d2) const {
    if (const FactoryModel* f = find(kind, d1, d2)) {
        return *f;
    }
    throw UnsupportedError("unsupported distance: no " + std::string(to_string(kind)) +
                           " factory for d1=" + std::to_string(d1) +
                           ", d2=" + std::to_string(d2));
}

}  // namespace shorcost
