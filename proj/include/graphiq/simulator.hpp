#pragma once

#include <complex>
#include <map>
#include <vector>

#include "graphiq/circuit.hpp"
#include "graphiq/rng.hpp"

namespace graphiq {

using Amplitude = std::complex<double>;

// Dense statevector over Q qubits; qubit 0 is the least significant bit of
// the amplitude index.
struct Statevector {
    int qubit_count = 0;
    std::vector<Amplitude> amplitudes;

    static Statevector zero(int qubit_count);
    double norm() const;
};

// In-place gate application, restricted to basis states matching every
// control's polarity.
void apply_gate(Statevector& state, const Gate& gate);

// All gates applied to |0...0>.
Statevector run(const Circuit& circuit);
Statevector run(const std::vector<Gate>& gates, int qubit_count);

// Probability that measuring `qubit` yields `outcome`.
double probability(const Statevector& state, int qubit, int outcome);

// Projects onto the outcome subspace and renormalizes; throws
// PostSelectionError when the outcome has zero probability.
Statevector collapse(const Statevector& state, int qubit, int outcome);

// `shots` independent draws from the joint measurement distribution of the
// listed qubits. Key character k corresponds to qubits[k] ('0'/'1').
std::map<std::string, long> sample(const Statevector& state, const std::vector<int>& qubits,
                                   long shots, Rng& rng);

}  // namespace graphiq
