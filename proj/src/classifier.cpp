#include "graphiq/classifier.hpp"

#include <cmath>
#include <json.hpp>

namespace graphiq {

void TrainingSet::validate() const {
    if (members.size() < 2) throw ContractError("TrainingSet: need at least 2 members");
    bool has_pos = false, has_neg = false;
    const int n = members.front().graph.n;
    for (const auto& m : members) {
        if (m.label == +1)
            has_pos = true;
        else if (m.label == -1)
            has_neg = true;
        else
            throw ContractError("TrainingSet: labels must be +1 or -1");
        if (m.graph.n != n) throw ContractError("TrainingSet: members must share the same n");
    }
    if (!has_pos || !has_neg) throw ContractError("TrainingSet: both labels must be present");
}

std::string ClassificationOutcome::to_json() const {
    nlohmann::json j;
    j["p"] = p_class0;
    j["decision"] = decision == 0 ? "unknown" : (decision > 0 ? "+1" : "-1");
    j["mode"] = mode == Mode::exact ? "exact" : "shots";
    j["shots_kept"] = shots_kept;
    j["shots_total"] = shots_total;
    return j.dump();
}

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int ceil_log2_count(std::size_t v) {
    int n = 0;
    while ((std::size_t{1} << n) < v) ++n;
    return n;
}

std::vector<AmplitudeVector> encode_members(const TrainingSet& train) {
    std::vector<AmplitudeVector> out;
    out.reserve(train.size());
    for (const auto& m : train.members) out.push_back(encode(m.graph));
    return out;
}

struct Layout {
    Register a, m, g, c;
    int total;
};

Layout make_layout(std::size_t M, int g_qubits) {
    const int mq = std::max(1, ceil_log2_count(M));
    Layout l;
    l.a = {"a", 0, 1};
    l.m = {"m", 1, mq};
    l.g = {"g", 1 + mq, g_qubits};
    l.c = {"c", 1 + mq + g_qubits, 1};
    l.total = 2 + mq + g_qubits;
    return l;
}

// Every fragment gate shifted into the g register and given the extra controls.
void append_controlled_prep(std::vector<Gate>& gates, const CircuitFragment& fragment,
                            int g_first, const std::vector<ControlBit>& controls) {
    for (const auto& g : fragment.gates) {
        Gate shifted = g.shifted(g_first);
        for (const auto& c : controls) shifted = shifted.with_control(c.qubit, c.polarity);
        gates.push_back(shifted);
    }
}

std::vector<ControlBit> index_controls(const Register& m, std::size_t value) {
    std::vector<ControlBit> out;
    for (int b = 0; b < m.count; ++b)
        out.push_back({m.first + b, static_cast<int>((value >> b) & 1)});
    return out;
}

int decide(double p) {
    if (p > 0.5 + kQuantumTieBand) return +1;
    if (p < 0.5 - kQuantumTieBand) return -1;
    return 0;
}

}  // namespace

Circuit build_classifier_circuit(const AmplitudeVector& test, const TrainingSet& train) {
    train.validate();
    const auto members = encode_members(train);
    const std::size_t M = train.size();
    for (const auto& mv : members)
        if (mv.qubit_count != test.qubit_count)
            throw ContractError("build_classifier_circuit: register size mismatch between test "
                                "and training encodings");
    const Layout l = make_layout(M, test.qubit_count);

    Circuit circuit;
    circuit.registers = {l.a, l.m, l.g, l.c};

    auto& gates = circuit.gates;
    gates.push_back(Gate::h(l.a.first));
    if (is_power_of_two(M)) {
        for (int b = 0; b < l.m.count; ++b) gates.push_back(Gate::h(l.m.first + b));
    } else {
        // Uniform superposition over the first M index states.
        std::vector<double> uniform(M, 1.0);
        const auto prep = synthesize_state_prep(encode(uniform));
        for (const auto& g : prep.gates) gates.push_back(g.shifted(l.m.first));
    }

    // Test graph rides the a=0 branch: prep controlled on a, then X on a.
    append_controlled_prep(gates, synthesize_state_prep(test), l.g.first, {{l.a.first, 1}});
    gates.push_back(Gate::x(l.a.first));

    if (M == 2) {
        // Figure order: member with label +1 is G1 (lands on m=0 after the X).
        const std::size_t first = train.members[0].label == +1 ? 0 : 1;
        const std::size_t second = 1 - first;
        const std::vector<ControlBit> both = {{l.a.first, 1}, {l.m.first, 1}};
        append_controlled_prep(gates, synthesize_state_prep(members[first]), l.g.first, both);
        gates.push_back(Gate::x(l.m.first));
        append_controlled_prep(gates, synthesize_state_prep(members[second]), l.g.first, both);
        gates.push_back(Gate::cx(l.m.first, l.c.first));
    } else {
        // Index-controlled preps; class wiring by multi-controlled X per
        // negative-label index.
        for (std::size_t j = 0; j < M; ++j) {
            auto controls = index_controls(l.m, j);
            controls.push_back({l.a.first, 1});
            append_controlled_prep(gates, synthesize_state_prep(members[j]), l.g.first, controls);
        }
        for (std::size_t j = 0; j < M; ++j) {
            if (train.members[j].label != -1) continue;
            Gate flip = Gate::x(l.c.first);
            for (const auto& c : index_controls(l.m, j)) flip = flip.with_control(c.qubit, c.polarity);
            gates.push_back(flip);
        }
    }

    gates.push_back(Gate::h(l.a.first));
    circuit.validate();
    return circuit;
}

double closed_form_class_probability(const AmplitudeVector& test, const TrainingSet& train) {
    train.validate();
    const auto members = encode_members(train);
    double numerator = 0.0, denominator = 0.0;
    for (std::size_t m = 0; m < members.size(); ++m) {
        double sum = 0.0;
        for (std::size_t i = 0; i < test.amplitudes.size(); ++i)
            sum += std::norm(test.amplitudes[i] + members[m].amplitudes[i]);
        denominator += sum;
        if (train.members[m].label == +1) numerator += sum;
    }
    if (denominator <= 0.0)
        throw PostSelectionError("closed_form_class_probability: ancilla-0 branch has zero weight");
    return numerator / denominator;
}

double post_selection_probability(const AmplitudeVector& test, const TrainingSet& train) {
    train.validate();
    const auto members = encode_members(train);
    double z = 0.0;
    for (const auto& mv : members)
        for (std::size_t i = 0; i < test.amplitudes.size(); ++i)
            z += std::norm(test.amplitudes[i] + mv.amplitudes[i]);
    return z / (4.0 * static_cast<double>(members.size()));
}

double exact_class_probability(const AmplitudeVector& test, const TrainingSet& train) {
    const Circuit circuit = build_classifier_circuit(test, train);
    const Statevector final_state = run(circuit);
    const int a_qubit = circuit.reg("a").first;
    const int c_qubit = circuit.reg("c").first;
    if (probability(final_state, a_qubit, 0) <= 0.0)
        throw PostSelectionError("exact_class_probability: ancilla never measures 0");
    const Statevector kept = collapse(final_state, a_qubit, 0);
    const double p_circuit = probability(kept, c_qubit, 0);
    const double p_formula = closed_form_class_probability(test, train);
    if (std::abs(p_circuit - p_formula) > 1e-10)
        throw Error("exact_class_probability: circuit and closed form disagree (" +
                    std::to_string(p_circuit) + " vs " + std::to_string(p_formula) + ")");
    return p_circuit;
}

ClassificationOutcome classify_quantum_exact(const AmplitudeVector& test,
                                             const TrainingSet& train) {
    ClassificationOutcome out;
    out.mode = Mode::exact;
    out.p_class0 = exact_class_probability(test, train);
    out.decision = decide(out.p_class0);
    return out;
}

ClassificationOutcome classify_quantum_shots(const AmplitudeVector& test,
                                             const TrainingSet& train, long shots, Rng& rng) {
    if (shots < 1) throw ContractError("classify_quantum_shots: shots must be >= 1");
    const Circuit circuit = build_classifier_circuit(test, train);
    const Statevector final_state = run(circuit);
    const int a_qubit = circuit.reg("a").first;
    const int c_qubit = circuit.reg("c").first;
    const auto hist = sample(final_state, {a_qubit, c_qubit}, shots, rng);
    long kept = 0, class0 = 0;
    for (const auto& [key, count] : hist) {
        if (key[0] != '0') continue;  // ancilla-1 shots are discarded
        kept += count;
        if (key[1] == '0') class0 += count;
    }
    if (kept == 0)
        throw PostSelectionError("classify_quantum_shots: no shot survived post-selection");
    ClassificationOutcome out;
    out.mode = Mode::shots;
    out.shots_total = shots;
    out.shots_kept = kept;
    out.p_class0 = static_cast<double>(class0) / static_cast<double>(kept);
    out.decision = decide(out.p_class0);
    return out;
}

double frobenius_distance(const AdjacencyVector& g1, const AdjacencyVector& g2) {
    if (g1.entries.size() != g2.entries.size())
        throw ContractError("frobenius_distance: length mismatch (" +
                            std::to_string(g1.entries.size()) + " vs " +
                            std::to_string(g2.entries.size()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < g1.entries.size(); ++i) {
        const double diff = g1.entries[i] - g2.entries[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

int classify_classical(const AdjacencyVector& test, const TrainingSet& train,
                       double tie_tolerance) {
    train.validate();
    double score = 0.0;
    for (const auto& m : train.members)
        score += static_cast<double>(m.label) * frobenius_distance(test, m.graph);
    if (std::abs(score) < tie_tolerance) return 0;
    return score < 0.0 ? +1 : -1;
}

}  // namespace graphiq
