#include "graphiq/circuit.hpp"

#include <algorithm>
#include <cstdio>

namespace graphiq {

int Circuit::qubit_count() const {
    int total = 0;
    for (const auto& r : registers) total += r.count;
    return total;
}

const Register& Circuit::reg(const std::string& name) const {
    for (const auto& r : registers)
        if (r.name == name) return r;
    throw ContractError("Circuit: no register named '" + name + "'");
}

void Circuit::validate() const {
    std::vector<Register> sorted = registers;
    std::sort(sorted.begin(), sorted.end(), [](const Register& a, const Register& b) {
        return a.first < b.first || (a.first == b.first && a.count < b.count);
    });
    int next = 0;
    for (const auto& r : sorted) {
        if (r.count < 0) throw ContractError("Circuit: register '" + r.name + "' has negative size");
        if (r.first != next)
            throw ContractError("Circuit: registers must be contiguous and disjoint");
        next += r.count;
    }
    const int q = qubit_count();
    for (const auto& g : gates) {
        if (g.target < 0 || g.target >= q)
            throw ContractError("Circuit: gate target out of range");
        for (const auto& c : g.controls) {
            if (c.qubit < 0 || c.qubit >= q) throw ContractError("Circuit: control out of range");
            if (c.qubit == g.target)
                throw ContractError("Circuit: control and target overlap");
            if (c.polarity != 0 && c.polarity != 1)
                throw ContractError("Circuit: control polarity must be 0 or 1");
        }
    }
}

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::h: return "h";
        case GateKind::x: return "x";
        case GateKind::cx: return "cx";
        case GateKind::ry: return "ry";
        case GateKind::rz: return "rz";
        default: return "u";
    }
}

std::string gate_to_text(const Gate& gate) {
    char buf[64];
    std::string line = to_string(gate.kind);
    std::size_t extra_controls_from = 0;
    if (gate.kind == GateKind::cx && !gate.controls.empty() && gate.controls[0].polarity == 1) {
        line += ' ' + std::to_string(gate.controls[0].qubit);
        extra_controls_from = 1;
    }
    line += ' ' + std::to_string(gate.target);
    if (gate.kind == GateKind::ry || gate.kind == GateKind::rz || gate.kind == GateKind::u) {
        std::snprintf(buf, sizeof buf, " %.17g", gate.angle);
        line += buf;
    }
    if (gate.controls.size() > extra_controls_from) {
        line += " @";
        for (std::size_t k = extra_controls_from; k < gate.controls.size(); ++k)
            line += ' ' + std::to_string(gate.controls[k].qubit) + ':' +
                    std::to_string(gate.controls[k].polarity);
    }
    return line;
}

std::string gates_to_text(const std::vector<Gate>& gates) {
    std::string out;
    for (const auto& g : gates) {
        out += gate_to_text(g);
        out += '\n';
    }
    return out;
}

}  // namespace graphiq
