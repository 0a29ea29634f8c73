#include "shorcost/sim/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shorcost::sim {

std::vector<int> Circuit::add_register(const std::string& name, int width) {
    if (width < 0) {
        throw std::invalid_argument("register width must be non-negative");
    }
    if (registers_.count(name)) {
        throw std::invalid_argument("duplicate register '" + name + "'");
    }
    registers_[name] = RegisterSpan{num_qubits_, width};
    std::vector<int> q(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        q[static_cast<std::size_t>(i)] = num_qubits_ + i;
    }
    num_qubits_ += width;
    return q;
}

std::vector<int> Circuit::qubits(const std::string& name) const {
    const auto it = registers_.find(name);
    if (it == registers_.end()) {
        throw std::out_of_range("no register '" + name + "'");
    }
    std::vector<int> q(static_cast<std::size_t>(it->second.width));
    for (int i = 0; i < it->second.width; ++i) {
        q[static_cast<std::size_t>(i)] = it->second.offset + i;
    }
    return q;
}

bool Circuit::has_register(const std::string& name) const { return registers_.count(name) != 0; }

void Circuit::set_num_cbits(int count) {
    if (count < 0) {
        throw std::invalid_argument("classical bit count must be non-negative");
    }
    num_cbits_ = count;
}

void Circuit::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range [0, " +
                                std::to_string(num_qubits_) + ")");
    }
}

void Circuit::x(int target) { append(Gate{GateKind::Not, -1, -1, target, -1, true}); }

void Circuit::cx(int control, int target) {
    append(Gate{GateKind::Cnot, control, -1, target, -1, true});
}

void Circuit::ccx(int c0, int c1, int target, bool counted) {
    append(Gate{GateKind::Toffoli, c0, c1, target, -1, counted});
}

void Circuit::classical_x(int cbit, int target) {
    append(Gate{GateKind::ClassicalCtrl, -1, -1, target, cbit, true});
}

void Circuit::append(const Gate& g) {
    check_qubit(g.target);
    switch (g.kind) {
    case GateKind::Not: break;
    case GateKind::Cnot:
        check_qubit(g.c0);
        if (g.c0 == g.target) throw std::invalid_argument("CNOT control equals target");
        break;
    case GateKind::Toffoli:
        check_qubit(g.c0);
        check_qubit(g.c1);
        if (g.c0 == g.target || g.c1 == g.target) {
            throw std::invalid_argument("Toffoli control equals target");
        }
        break;
    case GateKind::ClassicalCtrl:
        if (g.cbit < 0 || g.cbit >= num_cbits_) {
            throw std::out_of_range("classical bit " + std::to_string(g.cbit) + " out of range");
        }
        break;
    }
    gates_.push_back(g);
}

void Circuit::append_reverse(std::size_t begin, std::size_t end, bool counted) {
    if (begin > end || end > gates_.size()) {
        throw std::out_of_range("append_reverse range");
    }
    for (std::size_t i = end; i-- > begin;) {
        Gate g = gates_[i];
        if (g.kind == GateKind::Toffoli) {
            g.counted = counted;
        }
        gates_.push_back(g);
    }
}

BasisState::BasisState(int qubits, int cbits)
    : num_qubits_(qubits),
      words_(static_cast<std::size_t>((qubits + 63) / 64), 0),
      record_(static_cast<std::size_t>(cbits), 0) {}

std::uint64_t BasisState::read(std::span<const int> qubits) const {
    if (qubits.size() > 64) {
        throw std::invalid_argument("read wider than 64 bits");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        v |= std::uint64_t{get(qubits[i])} << i;
    }
    return v;
}

void BasisState::write(std::span<const int> qubits, std::uint64_t value) {
    if (qubits.size() < 64 && (value >> qubits.size()) != 0) {
        throw std::invalid_argument("value does not fit the register");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        set(qubits[i], (value >> i) & 1U);
    }
}

void apply(const Circuit& circuit, BasisState& state) {
    if (state.num_qubits() != circuit.num_qubits() || state.num_cbits() < circuit.num_cbits()) {
        throw std::invalid_argument("state width does not match the circuit");
    }
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::Not: state.flip(g.target); break;
        case GateKind::Cnot:
            if (state.get(g.c0)) state.flip(g.target);
            break;
        case GateKind::Toffoli:
            if (state.get(g.c0) && state.get(g.c1)) state.flip(g.target);
            break;
        case GateKind::ClassicalCtrl:
            if (state.record(g.cbit)) state.flip(g.target);
            break;
        }
    }
}

BasisState simulate(const Circuit& circuit, BasisState state) {
    apply(circuit, state);
    return state;
}

ResourceCount count_resources(const Circuit& circuit) {
    ResourceCount r;
    std::vector<std::int64_t> layer(static_cast<std::size_t>(circuit.num_qubits()), 0);
    auto at = [&](int q) -> std::int64_t& { return layer[static_cast<std::size_t>(q)]; };
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::Not:
        case GateKind::ClassicalCtrl: break;
        case GateKind::Cnot: {
            const auto t = std::max(at(g.c0), at(g.target));
            at(g.c0) = at(g.target) = t;
            break;
        }
        case GateKind::Toffoli: {
            auto t = std::max({at(g.c0), at(g.c1), at(g.target)});
            if (g.counted) {
                ++r.toffolis;
                ++t;
            } else {
                ++r.uncounted_toffolis;
            }
            at(g.c0) = at(g.c1) = at(g.target) = t;
            r.measurement_depth = std::max(r.measurement_depth, t);
            break;
        }
        }
    }
    return r;
}

std::string to_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << '\n';
    out << "cbits " << circuit.num_cbits() << '\n';
    std::vector<std::pair<std::string, RegisterSpan>> regs(circuit.registers().begin(),
                                                           circuit.registers().end());
    std::sort(regs.begin(), regs.end(),
              [](const auto& a, const auto& b) { return a.second.offset < b.second.offset; });
    for (const auto& [name, span] : regs) {
        out << "reg " << name << ' ' << span.offset << ' ' << span.width << '\n';
    }
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::Not: out << "NOT " << g.target; break;
        case GateKind::Cnot: out << "CNOT " << g.c0 << ' ' << g.target; break;
        case GateKind::Toffoli:
            out << "TOFFOLI " << g.c0 << ' ' << g.c1 << ' ' << g.target;
            if (!g.counted) out << " ~";
            break;
        case GateKind::ClassicalCtrl: out << "CCTRL c" << g.cbit << ' ' << g.target; break;
        }
        out << '\n';
    }
    return out.str();
}

Circuit parse_text(std::string_view text) {
    Circuit c;
    std::istringstream in{std::string(text)};
    std::string line;
    int declared_qubits = -1;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("circuit text line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string op;
        ls >> op;
        if (op == "qubits") {
            ls >> declared_qubits;
        } else if (op == "cbits") {
            int n = 0;
            ls >> n;
            c.set_num_cbits(n);
        } else if (op == "reg") {
            std::string name;
            int offset = 0;
            int width = 0;
            ls >> name >> offset >> width;
            if (offset != c.num_qubits()) fail("registers must be declared in offset order");
            c.add_register(name, width);
        } else {
            if (c.num_qubits() < declared_qubits) {
                c.add_register("_anon", declared_qubits - c.num_qubits());
            }
            Gate g;
            if (op == "NOT") {
                g.kind = GateKind::Not;
                ls >> g.target;
            } else if (op == "CNOT") {
                g.kind = GateKind::Cnot;
                ls >> g.c0 >> g.target;
            } else if (op == "TOFFOLI") {
                g.kind = GateKind::Toffoli;
                ls >> g.c0 >> g.c1 >> g.target;
                if (ls.fail()) fail("malformed operands");
                std::string flag;
                if (ls >> flag) {
                    if (flag != "~") fail("unexpected token '" + flag + "'");
                    g.counted = false;
                }
                ls.clear();
            } else if (op == "CCTRL") {
                g.kind = GateKind::ClassicalCtrl;
                std::string cb;
                ls >> cb >> g.target;
                if (cb.size() < 2 || cb[0] != 'c') fail("classical bit must look like c<k>");
                g.cbit = std::stoi(cb.substr(1));
            } else {
                fail("unknown gate '" + op + "'");
            }
            if (ls.fail()) fail("malformed operands");
            c.append(g);
        }
        if (ls.fail()) fail("malformed line");
    }
    if (declared_qubits >= 0 && c.num_qubits() < declared_qubits) {
        c.add_register("_anon", declared_qubits - c.num_qubits());
    }
    return c;
}

}  // namespace shorcost::sim
