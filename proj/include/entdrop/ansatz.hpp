// Copyright 2026 The entdrop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The data re-uploading circuit model: an input-encoding layer S(x) followed
 * by a trainable layer W(theta), repeated n_layers times, measured through a
 * Pauli-Z-sum observable:
 *
 *     f(x; theta) = <0...0| U^dag A U |0...0>,
 *     U = W(theta_L) S(x) ... W(theta_1) S(x).
 *
 * S(x) places one RY(g(x_feat)) on every qubit (feature routed per
 * encoding_map, g = arcsin by default). Each W layer applies a fixed list of
 * rotation slots per qubit followed by the layer's CNOT slots; a DropoutMask
 * can remove individual CNOT slots for one evaluation.
 */

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "entdrop/statevector.hpp"

namespace entdrop {

enum class Axis { RX, RY, RZ };

enum class EncodingFn {
    Arcsin,  ///< angle = arcsin(x), defined for |x| <= 1
    Identity ///< angle = x (used when feeding angles directly)
};

/// One CNOT slot of a trainable layer.
struct CnotSlot {
    int control = 0;
    int target = 1;
    bool operator==(const CnotSlot &) const = default;
};

/// Static circuit description. Parameter count is
/// n_layers * n_qubits * rotation_axes.size(); parameters are indexed
/// layer-major, then qubit, then rotation slot.
struct AnsatzSpec {
    int n_qubits = 5;
    int n_layers = 1;
    /// Rotation axes of the per-qubit rotation slots in each trainable layer.
    std::vector<Axis> rotation_axes = {Axis::RZ, Axis::RY, Axis::RZ};
    /// Per layer, the ordered list of CNOT slots (the objects dropout can
    /// remove).
    std::vector<std::vector<CnotSlot>> entangler_slots;
    /// Per qubit, the input feature index read by that qubit's encoding
    /// rotation.
    std::vector<int> encoding_map;
    EncodingFn encoding_fn = EncodingFn::Arcsin;
    Observable observable = Observable::z(0);

    int rotations_per_qubit() const {
        return static_cast<int>(rotation_axes.size());
    }
    int param_count() const {
        return n_layers * n_qubits * rotations_per_qubit();
    }
    /// Flat parameter index of (layer, qubit, rotation slot).
    int param_index(int layer, int qubit, int slot) const {
        return (layer * n_qubits + qubit) * rotations_per_qubit() + slot;
    }
    /// Inverse of param_index.
    std::array<int, 3> param_coords(int index) const;

    int total_entangler_slots() const;

    /// Throws ConfigError if any invariant is violated.
    void validate() const;

    /// ZYZ rotations plus rotations_per_qubit passes of the nearest-neighbor
    /// CNOT chain per layer (12 slots per layer at n_qubits = 5).
    static AnsatzSpec hardware_efficient(int n_qubits, int n_layers,
                                         Observable observable,
                                         std::vector<int> encoding_map);
    /// 5 qubits, all encoding rotations read feature 0, A = Z on qubit 0.
    static AnsatzSpec regression_default(int n_layers);
    /// 5 qubits, encoding map (0,1,0,1,0), A = Z(q0) - Z(q1).
    static AnsatzSpec classification_default(int n_layers);

    bool operator==(const AnsatzSpec &) const = default;
};

/// The default CNOT slot list of one hardware-efficient layer: `passes`
/// repetitions of the chain (0,1), (1,2), ..., (n-2, n-1).
std::vector<CnotSlot> chain_entangler_slots(int n_qubits, int passes);

/// Flat vector of rotation angles, aligned with AnsatzSpec::param_index.
struct ParamVector {
    std::vector<double> values;

    ParamVector() = default;
    explicit ParamVector(std::vector<double> v) : values(std::move(v)) {}
    static ParamVector zeros(const AnsatzSpec &spec) {
        return ParamVector(std::vector<double>(spec.param_count(), 0.0));
    }

    std::size_t size() const { return values.size(); }
    double &operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    bool operator==(const ParamVector &) const = default;
};

/// Per-iteration keep/remove flags over every CNOT slot of every layer
/// (true = gate present). Shape mirrors AnsatzSpec::entangler_slots.
struct DropoutMask {
    std::vector<std::vector<std::uint8_t>> keep;

    static DropoutMask all_true(const AnsatzSpec &spec);

    int removed_count() const;
    int kept_count() const;

    bool operator==(const DropoutMask &) const = default;
};

/// One gate of a fully-bound circuit; param_index is -1 for gates that carry
/// no trainable parameter (encoding rotations and CNOTs).
struct BoundGate {
    Gate gate;
    int param_index = -1;
};

/// Encoding layer S(x): one RY(g(x_feat)) per qubit. Throws
/// EncodingDomainError when |x_feat| > 1 under the arcsin encoding, and
/// ConfigError when the encoding map references a missing feature.
std::vector<Gate> encode_layer_gates(const AnsatzSpec &spec,
                                     std::span<const double> x);

/// Encoding layer with precomputed per-feature angles (the encoding function
/// is bypassed). Used by the Fourier analysis, which works in the angle
/// variable u = g(x).
std::vector<Gate> encode_layer_gates_from_angles(
    const AnsatzSpec &spec, std::span<const double> feature_angles);

/// Trainable layer W(theta_layer): every rotation slot (dropout never removes
/// rotations) followed by the CNOT slots whose keep flag is true, in slot
/// order.
std::vector<Gate> variational_layer_gates(const AnsatzSpec &spec, int layer,
                                          const ParamVector &params,
                                          const DropoutMask &mask);

/// Appends the complete bound circuit for input x under `mask` (pass nullptr
/// for the undropped circuit) to `out`.
void build_circuit(const AnsatzSpec &spec, const ParamVector &params,
                   std::span<const double> x, const DropoutMask *mask,
                   std::vector<BoundGate> &out);

/// Same, but with raw per-feature encoding angles.
void build_circuit_from_angles(const AnsatzSpec &spec,
                               const ParamVector &params,
                               std::span<const double> feature_angles,
                               const DropoutMask *mask,
                               std::vector<BoundGate> &out);

/// Runs a bound circuit on |0...0> and returns the final state.
StateVector run_circuit(const AnsatzSpec &spec,
                        const std::vector<BoundGate> &circuit);

/// f(x; theta) for the dropout-masked circuit.
double forward(const AnsatzSpec &spec, const ParamVector &params,
               std::span<const double> x, const DropoutMask &mask);

/// f(x; theta) for the undropped circuit.
double forward(const AnsatzSpec &spec, const ParamVector &params,
               std::span<const double> x);

/// Convenience overloads for 1-D inputs.
double forward(const AnsatzSpec &spec, const ParamVector &params, double x,
               const DropoutMask &mask);
double forward(const AnsatzSpec &spec, const ParamVector &params, double x);

/// f evaluated with raw per-feature encoding angles (no encoding function).
double forward_from_angles(const AnsatzSpec &spec, const ParamVector &params,
                           std::span<const double> feature_angles,
                           const DropoutMask *mask);

/// Probability 2-vector (sigma(f), sigma(-f)) with f = forward(...), equal to
/// softmax(<Z_q0>, <Z_q1>) when the observable is Z(q0) - Z(q1). Components
/// are positive and sum to 1.
std::array<double, 2> classifier_output(const AnsatzSpec &spec,
                                        const ParamVector &params,
                                        std::span<const double> x,
                                        const DropoutMask &mask);
std::array<double, 2> classifier_output(const AnsatzSpec &spec,
                                        const ParamVector &params,
                                        std::span<const double> x);

/// Discrete Fourier coefficients of the angle-domain model u -> f(u), u
/// sampled uniformly over [-pi, pi). Frequencies run over the signed DFT
/// bins of the sample grid, sorted ascending.
struct FourierSpectrum {
    std::vector<int> frequencies;
    std::vector<cx> coefficients;

    double total_energy() const;
    /// Energy in coefficients with |frequency| > band.
    double energy_outside(int band) const;
    /// Frequencies whose coefficient magnitude exceeds `threshold`.
    std::vector<int> support(double threshold) const;
};

/// Spectrum of a 1-D model (every encoding rotation must read feature 0;
/// anything else throws AnalysisError). Requires
/// n_samples >= 2 * n_qubits * n_layers + 2 so the band-limited spectrum is
/// recovered without aliasing.
FourierSpectrum fourier_coefficients(const AnsatzSpec &spec,
                                     const ParamVector &params, int n_samples);

} // namespace entdrop
