#pragma once

#include <string>
#include <vector>

#include "graphiq/types.hpp"

namespace graphiq {

enum class GateKind { h, x, cx, ry, rz, u };

struct ControlBit {
    int qubit = 0;
    int polarity = 1;  // 1 = filled control, 0 = open (anti-) control
};

// One gate application. `controls` may extend any kind; a plain CX carries
// its control there with polarity 1.
struct Gate {
    GateKind kind = GateKind::x;
    int target = 0;
    double angle = 0.0;
    std::vector<ControlBit> controls;

    static Gate h(int q) { return {GateKind::h, q, 0.0, {}}; }
    static Gate x(int q) { return {GateKind::x, q, 0.0, {}}; }
    static Gate cx(int control, int target) { return {GateKind::cx, target, 0.0, {{control, 1}}}; }
    static Gate ry(int q, double theta) { return {GateKind::ry, q, theta, {}}; }
    static Gate rz(int q, double phi) { return {GateKind::rz, q, phi, {}}; }
    static Gate u(int q, double theta) { return {GateKind::u, q, theta, {}}; }

    Gate with_control(int qubit, int polarity = 1) const {
        Gate g = *this;
        g.controls.push_back({qubit, polarity});
        return g;
    }

    Gate shifted(int offset) const {
        Gate g = *this;
        g.target += offset;
        for (auto& c : g.controls) c.qubit += offset;
        return g;
    }
};

// Gate list over an anonymous register of `qubit_count` qubits, application
// order = list order. Output of the state-prep synthesizer.
struct CircuitFragment {
    int qubit_count = 0;
    std::vector<Gate> gates;
};

struct Register {
    std::string name;
    int first = 0;
    int count = 0;
};

// Gate list over named, contiguous, disjoint qubit ranges.
struct Circuit {
    std::vector<Register> registers;
    std::vector<Gate> gates;

    int qubit_count() const;
    const Register& reg(const std::string& name) const;
    void validate() const;  // throws ContractError on layout/index violations
};

std::string to_string(GateKind kind);

// One gate per line: name, qubits, angle, then `@ q:pol ...` for any controls
// beyond a plain CX's. Examples: "h 0", "cx 0 2", "ry 1 0.5", "ry 1 0.5 @ 0:1 3:0".
std::string gate_to_text(const Gate& gate);
std::string gates_to_text(const std::vector<Gate>& gates);

}  // namespace graphiq
