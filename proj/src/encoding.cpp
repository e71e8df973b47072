#include "graphiq/encoding.hpp"

#include <bit>
#include <cmath>

namespace graphiq {

namespace {

constexpr double kAngleFloor = 1e-14;  // rotations below this are numerically inert

int ceil_log2(std::size_t d) {
    int n = 0;
    while ((std::size_t{1} << n) < d) ++n;
    return n;
}

int gray(int k) { return k ^ (k >> 1); }

bool all_negligible(const std::vector<double>& angles) {
    for (double a : angles)
        if (std::abs(a) >= kAngleFloor) return false;
    return true;
}

// Drops immediately adjacent identical CX pairs left over after rotation
// elision; everything else is preserved in order.
void cancel_adjacent_cx(std::vector<Gate>& gates) {
    std::vector<Gate> out;
    for (const auto& g : gates) {
        if (!out.empty() && g.kind == GateKind::cx && out.back().kind == GateKind::cx &&
            g.target == out.back().target && g.controls.size() == 1 &&
            out.back().controls.size() == 1 &&
            g.controls[0].qubit == out.back().controls[0].qubit) {
            out.pop_back();
            continue;
        }
        out.push_back(g);
    }
    gates = std::move(out);
}

}  // namespace

AmplitudeVector encode(const std::vector<double>& entries) {
    double sum = 0.0;
    for (double g : entries) {
        if (!std::isfinite(g)) throw ContractError("encode: entries must be finite");
        sum += g * g;
    }
    if (sum <= 0.0) throw EncodingError("encode: all-zero vector has no normalization");
    const double gamma = std::sqrt(sum);
    AmplitudeVector out;
    out.qubit_count = ceil_log2(entries.size());
    out.gamma = gamma;
    out.amplitudes.assign(std::size_t{1} << out.qubit_count, {0.0, 0.0});
    for (std::size_t k = 0; k < entries.size(); ++k) out.amplitudes[k] = entries[k] / gamma;
    return out;
}

AmplitudeVector encode(const AdjacencyVector& vec) {
    for (double e : vec.entries)
        if (e < 0.0) throw ContractError("encode: adjacency weights must be >= 0");
    return encode(vec.entries);
}

std::vector<Gate> multiplexed_rotation(const std::vector<double>& angles, RotationAxis axis,
                                       int target_qubit, const std::vector<int>& control_qubits) {
    const std::size_t c = control_qubits.size();
    if (angles.size() != (std::size_t{1} << c))
        throw ContractError("multiplexed_rotation: need 2^controls angles, got " +
                            std::to_string(angles.size()) + " for " + std::to_string(c) +
                            " controls");
    const auto rot = [&](double a) {
        return axis == RotationAxis::y ? Gate::ry(target_qubit, a) : Gate::rz(target_qubit, a);
    };
    if (all_negligible(angles)) return {};
    if (c == 0) return {rot(angles[0])};

    // Hadamard-transformed angles: t[k] = 2^-c * sum_j (-1)^<j, gray(k)> theta[j].
    const int count = 1 << c;
    std::vector<double> t(count, 0.0);
    const double scale = 1.0 / count;
    for (int k = 0; k < count; ++k) {
        double acc = 0.0;
        for (int j = 0; j < count; ++j)
            acc += (std::popcount(static_cast<unsigned>(j & gray(k))) & 1) ? -angles[j] : angles[j];
        t[k] = acc * scale;
    }

    std::vector<Gate> gates;
    for (int k = 0; k < count; ++k) {
        if (std::abs(t[k]) >= kAngleFloor) gates.push_back(rot(t[k]));
        const int change = gray(k) ^ gray((k + 1) % count);
        const int bit = std::countr_zero(static_cast<unsigned>(change));
        gates.push_back(Gate::cx(control_qubits[bit], target_qubit));
    }
    cancel_adjacent_cx(gates);
    return gates;
}

CircuitFragment synthesize_state_prep(const AmplitudeVector& target) {
    double norm2 = 0.0;
    for (const auto& a : target.amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw ContractError("synthesize_state_prep: target is not normalized");
    if (target.amplitudes.size() != (std::size_t{1} << target.qubit_count))
        throw ContractError("synthesize_state_prep: amplitude count != 2^qubit_count");

    const int n_qubits = target.qubit_count;
    std::vector<std::complex<double>> work = target.amplitudes;
    std::vector<Gate> inverse;

    // Disentangle the top qubit at each level, mapping target -> |0...0>.
    for (int q = n_qubits - 1; q >= 0; --q) {
        const std::size_t half = std::size_t{1} << q;
        std::vector<double> thetas(half, 0.0), phis(half, 0.0);
        for (std::size_t x = 0; x < half; ++x) {
            const std::complex<double> lo = work[x];
            const std::complex<double> hi = work[x + half];
            const double alo = std::abs(lo), ahi = std::abs(hi);
            if (alo < 1e-300 && ahi < 1e-300) {
                work[x] = 0.0;
                work[x + half] = 0.0;
                continue;
            }
            const double arg_lo = (alo > 0.0) ? std::arg(lo) : 0.0;
            const double arg_hi = (ahi > 0.0) ? std::arg(hi) : 0.0;
            phis[x] = arg_hi - arg_lo;
            thetas[x] = 2.0 * std::atan2(ahi, alo);
            const double mu = 0.5 * (arg_lo + arg_hi);
            work[x] = std::polar(std::hypot(alo, ahi), mu);
            work[x + half] = 0.0;
        }
        std::vector<int> controls(q);
        for (int k = 0; k < q; ++k) controls[k] = k;
        std::vector<double> neg_phis = phis, neg_thetas = thetas;
        for (auto& v : neg_phis) v = -v;
        for (auto& v : neg_thetas) v = -v;
        auto rz = multiplexed_rotation(neg_phis, RotationAxis::z, q, controls);
        auto ry = multiplexed_rotation(neg_thetas, RotationAxis::y, q, controls);
        inverse.insert(inverse.end(), rz.begin(), rz.end());
        inverse.insert(inverse.end(), ry.begin(), ry.end());
    }

    // Reverse with negated rotation angles to get |0...0> -> target.
    CircuitFragment fragment;
    fragment.qubit_count = n_qubits;
    fragment.gates.reserve(inverse.size());
    for (auto it = inverse.rbegin(); it != inverse.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::ry || g.kind == GateKind::rz) g.angle = -g.angle;
        fragment.gates.push_back(g);
    }
    return fragment;
}

}  // namespace graphiq
