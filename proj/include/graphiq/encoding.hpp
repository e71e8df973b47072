#pragma once

#include <complex>
#include <vector>

#include "graphiq/circuit.hpp"
#include "graphiq/graphs.hpp"

namespace graphiq {

// Unit-norm amplitude array of length 2^qubit_count together with the
// normalization constant of the source vector. Positions at or beyond the
// source dimension are exactly zero.
struct AmplitudeVector {
    int qubit_count = 0;
    double gamma = 0.0;
    std::vector<std::complex<double>> amplitudes;
};

enum class RotationAxis { y, z };

// Entry k (1-based) of the adjacency vector becomes amplitude k-1, divided by
// gamma = sqrt(sum of squared entries); zero-padded to the next power of two.
// Throws EncodingError when every entry is zero.
AmplitudeVector encode(const AdjacencyVector& vec);

AmplitudeVector encode(const std::vector<double>& entries);

// Uniformly controlled rotation about `axis`: applies R(angles[j]) to the
// target for control-register value j. Decomposed into 2^c plain rotations
// with Hadamard-transformed angles interleaved with CX gates whose controls
// follow the Gray-code bit-change sequence. angles.size() must be
// 2^controls.size(); controls are listed least-significant first.
std::vector<Gate> multiplexed_rotation(const std::vector<double>& angles, RotationAxis axis,
                                       int target_qubit, const std::vector<int>& control_qubits);

// Circuit of Ry/Rz/CX gates mapping |0...0> to `target` (global phase
// ignored). Built by recursively disentangling the top qubit with a
// multiplexed Rz (phases) then Ry (magnitudes) and reversing. Real
// nonnegative targets produce no Rz gates; rotations with negligible angle
// are elided, as are multiplexors whose angles all vanish.
CircuitFragment synthesize_state_prep(const AmplitudeVector& target);

}  // namespace graphiq
