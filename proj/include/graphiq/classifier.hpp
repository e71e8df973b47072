#pragma once

#include <string>
#include <vector>

#include "graphiq/encoding.hpp"
#include "graphiq/simulator.hpp"

namespace graphiq {

// Probability band around 0.5 inside which the quantum decision is "unknown".
inline constexpr double kQuantumTieBand = 0.0005;

// Tie tolerance of the classical sign classifier.
inline constexpr double kClassicalTieTolerance = 0.001;

// Labeled training graphs; labels are +1/-1, class qubit |0> corresponds to
// label +1. Requires M >= 2 with both labels present and a common n.
struct TrainingSet {
    struct Member {
        AdjacencyVector graph;
        int label = +1;
    };
    std::vector<Member> members;

    std::size_t size() const { return members.size(); }
    void validate() const;
};

enum class Mode { exact, shots };

struct ClassificationOutcome {
    double p_class0 = 0.0;          // p(class qubit = 0 | ancilla = 0)
    int decision = 0;               // +1, -1, or 0 for unknown
    Mode mode = Mode::exact;
    long shots_kept = 0;            // ancilla-0 shots (post-selected)
    long shots_total = 0;

    std::string to_json() const;    // {p, decision, mode, shots_kept, shots_total}
};

// Interference classifier circuit: registers a | m | g | c (least significant
// qubit first). For M = 2: H on a and m, test-state prep controlled on the
// ancilla followed by X on a, doubly controlled training preps with X on m
// between them, CX from m to c, final H on a.
Circuit build_classifier_circuit(const AmplitudeVector& test, const TrainingSet& train);

// p(c = 0 | a = 0) from the interference terms:
//   sum_{m: label=+1} sum_i |t_i + g_i^m|^2  /  sum_m sum_i |t_i + g_i^m|^2
// with all vectors normalized to unit length.
double closed_form_class_probability(const AmplitudeVector& test, const TrainingSet& train);

// Statevector route: run the circuit, post-select ancilla = 0, read the class
// qubit. Cross-checked against the closed form at 1e-10 before returning.
double exact_class_probability(const AmplitudeVector& test, const TrainingSet& train);

// p(ancilla = 0) before post-selection; equals (1/4M) sum_m sum_i |t_i+g_i^m|^2.
double post_selection_probability(const AmplitudeVector& test, const TrainingSet& train);

ClassificationOutcome classify_quantum_exact(const AmplitudeVector& test,
                                             const TrainingSet& train);

// Fixed budget of `shots` circuit executions; ancilla-1 shots are discarded,
// not re-run. Throws PostSelectionError if no shot survives.
ClassificationOutcome classify_quantum_shots(const AmplitudeVector& test,
                                             const TrainingSet& train, long shots, Rng& rng);

// sqrt(sum of squared entry differences) over raw (unnormalized) adjacency
// vectors; equals the matrix Frobenius norm of the difference divided by
// sqrt(2) (the upper triangle is counted once).
double frobenius_distance(const AdjacencyVector& g1, const AdjacencyVector& g2);

// -sgn(sum_m label_m * d(test, G^m)) with d = frobenius_distance; 0 when the
// sum's magnitude is below tie_tolerance.
int classify_classical(const AdjacencyVector& test, const TrainingSet& train,
                       double tie_tolerance = kClassicalTieTolerance);

}  // namespace graphiq
