#include "graphiq/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace graphiq {

Statevector Statevector::zero(int qubit_count) {
    if (qubit_count < 0 || qubit_count > 30)
        throw ContractError("Statevector: qubit count out of range");
    Statevector s;
    s.qubit_count = qubit_count;
    s.amplitudes.assign(std::size_t{1} << qubit_count, Amplitude{0.0, 0.0});
    s.amplitudes[0] = 1.0;
    return s;
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

namespace {

struct Mat2 {
    Amplitude m00, m01, m10, m11;
};

Mat2 gate_matrix(const Gate& g) {
    switch (g.kind) {
        case GateKind::h: {
            const double s = 0.70710678118654752440;
            return {s, s, s, -s};
        }
        case GateKind::x:
        case GateKind::cx: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::ry:
        case GateKind::u: {
            const double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
            return {c, -s, s, c};
        }
        case GateKind::rz:
        default: {
            const Amplitude e0 = std::exp(Amplitude(0.0, -g.angle / 2.0));
            const Amplitude e1 = std::exp(Amplitude(0.0, g.angle / 2.0));
            return {e0, 0.0, 0.0, e1};
        }
    }
}

}  // namespace

void apply_gate(Statevector& state, const Gate& gate) {
    const int q = state.qubit_count;
    if (gate.target < 0 || gate.target >= q)
        throw ContractError("apply_gate: target qubit out of range");
    std::uint64_t cmask = 0, cval = 0;
    for (const auto& c : gate.controls) {
        if (c.qubit < 0 || c.qubit >= q) throw ContractError("apply_gate: control out of range");
        if (c.qubit == gate.target) throw ContractError("apply_gate: control equals target");
        cmask |= std::uint64_t{1} << c.qubit;
        if (c.polarity) cval |= std::uint64_t{1} << c.qubit;
    }
    const Mat2 u = gate_matrix(gate);
    const std::uint64_t tbit = std::uint64_t{1} << gate.target;
    auto& a = state.amplitudes;
    const std::uint64_t size = a.size();
    for (std::uint64_t i = 0; i < size; ++i) {
        if (i & tbit) continue;
        if ((i & cmask) != cval) continue;
        const Amplitude lo = a[i];
        const Amplitude hi = a[i | tbit];
        a[i] = u.m00 * lo + u.m01 * hi;
        a[i | tbit] = u.m10 * lo + u.m11 * hi;
    }
}

Statevector run(const std::vector<Gate>& gates, int qubit_count) {
    Statevector s = Statevector::zero(qubit_count);
    for (const auto& g : gates) apply_gate(s, g);
    return s;
}

Statevector run(const Circuit& circuit) {
    circuit.validate();
    return run(circuit.gates, circuit.qubit_count());
}

double probability(const Statevector& state, int qubit, int outcome) {
    if (qubit < 0 || qubit >= state.qubit_count)
        throw ContractError("probability: qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i)
        if (((i & bit) != 0) == (outcome != 0)) p += std::norm(state.amplitudes[i]);
    return p;
}

Statevector collapse(const Statevector& state, int qubit, int outcome) {
    const double p = probability(state, qubit, outcome);
    if (p <= 0.0)
        throw PostSelectionError("collapse: outcome " + std::to_string(outcome) + " on qubit " +
                                 std::to_string(qubit) + " has zero probability");
    Statevector out = state;
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < out.amplitudes.size(); ++i) {
        if (((i & bit) != 0) == (outcome != 0))
            out.amplitudes[i] *= scale;
        else
            out.amplitudes[i] = 0.0;
    }
    return out;
}

std::map<std::string, long> sample(const Statevector& state, const std::vector<int>& qubits,
                                   long shots, Rng& rng) {
    if (shots < 1) throw ContractError("sample: shots must be >= 1");
    for (int q : qubits)
        if (q < 0 || q >= state.qubit_count) throw ContractError("sample: qubit out of range");

    // Marginal distribution over the listed qubits.
    const std::size_t outcomes = std::size_t{1} << qubits.size();
    std::vector<double> prob(outcomes, 0.0);
    for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
        const double w = std::norm(state.amplitudes[i]);
        if (w == 0.0) continue;
        std::size_t key = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k)
            if (i & (std::uint64_t{1} << qubits[k])) key |= std::size_t{1} << k;
        prob[key] += w;
    }
    std::vector<double> cdf(outcomes);
    double acc = 0.0;
    for (std::size_t k = 0; k < outcomes; ++k) {
        acc += prob[k];
        cdf[k] = acc;
    }

    std::vector<long> counts(outcomes, 0);
    for (long s = 0; s < shots; ++s) {
        const double r = rng.uniform01() * acc;
        const std::size_t k = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
        ++counts[k < outcomes ? k : outcomes - 1];
    }

    std::map<std::string, long> hist;
    for (std::size_t k = 0; k < outcomes; ++k) {
        if (counts[k] == 0) continue;
        std::string key(qubits.size(), '0');
        for (std::size_t b = 0; b < qubits.size(); ++b)
            if (k & (std::size_t{1} << b)) key[b] = '1';
        hist[key] = counts[k];
    }
    return hist;
}

}  // namespace graphiq
