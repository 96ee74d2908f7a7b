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

#include "entdrop/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entdrop/errors.hpp"

namespace entdrop {

namespace {

Gate rotation_gate(Axis axis, int qubit, double angle) {
    switch (axis) {
    case Axis::RX:
        return Gate::rx(qubit, angle);
    case Axis::RY:
        return Gate::ry(qubit, angle);
    case Axis::RZ:
        return Gate::rz(qubit, angle);
    }
    throw ConfigError("unknown rotation axis");
}

double encoding_angle(const AnsatzSpec &spec, double value, int feature) {
    switch (spec.encoding_fn) {
    case EncodingFn::Arcsin:
        if (!(std::abs(value) <= 1.0)) {
            throw EncodingDomainError(
                "encoding input x[" + std::to_string(feature) + "] = " +
                std::to_string(value) +
                " is outside [-1, 1], the domain of the arcsin encoding");
        }
        return std::asin(value);
    case EncodingFn::Identity:
        return value;
    }
    throw ConfigError("unknown encoding function");
}

void check_mask_shape(const AnsatzSpec &spec, const DropoutMask &mask) {
    if (mask.keep.size() != static_cast<std::size_t>(spec.n_layers)) {
        throw ConfigError("dropout mask has " +
                          std::to_string(mask.keep.size()) + " layers, spec has " +
                          std::to_string(spec.n_layers));
    }
    for (int l = 0; l < spec.n_layers; ++l) {
        if (mask.keep[l].size() != spec.entangler_slots[l].size()) {
            throw ConfigError("dropout mask layer " + std::to_string(l) +
                              " has " + std::to_string(mask.keep[l].size()) +
                              " slots, spec has " +
                              std::to_string(spec.entangler_slots[l].size()));
        }
    }
}

void check_params(const AnsatzSpec &spec, const ParamVector &params) {
    if (params.size() != static_cast<std::size_t>(spec.param_count())) {
        throw ConfigError("parameter vector has " +
                          std::to_string(params.size()) + " entries, spec needs " +
                          std::to_string(spec.param_count()));
    }
}

void append_encoding_layer(const AnsatzSpec &spec,
                           std::span<const double> feature_angles,
                           std::vector<BoundGate> &out) {
    for (int q = 0; q < spec.n_qubits; ++q) {
        const int feature = spec.encoding_map[q];
        if (feature < 0 ||
            feature >= static_cast<int>(feature_angles.size())) {
            throw ConfigError("encoding map entry for qubit " +
                              std::to_string(q) + " references feature " +
                              std::to_string(feature) + ", input has " +
                              std::to_string(feature_angles.size()) +
                              " feature(s)");
        }
        out.push_back({Gate::ry(q, feature_angles[feature]), -1});
    }
}

void append_variational_layer(const AnsatzSpec &spec, int layer,
                              const ParamVector &params,
                              const DropoutMask *mask,
                              std::vector<BoundGate> &out) {
    const int rotations = spec.rotations_per_qubit();
    for (int q = 0; q < spec.n_qubits; ++q) {
        for (int r = 0; r < rotations; ++r) {
            const int index = spec.param_index(layer, q, r);
            out.push_back({rotation_gate(spec.rotation_axes[r], q,
                                         params[index]),
                           index});
        }
    }
    const auto &slots = spec.entangler_slots[layer];
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask == nullptr || mask->keep[layer][s]) {
            out.push_back({Gate::cnot(slots[s].control, slots[s].target), -1});
        }
    }
}

std::vector<double> feature_angles_for(const AnsatzSpec &spec,
                                       std::span<const double> x) {
    std::vector<double> angles(x.size());
    for (std::size_t f = 0; f < x.size(); ++f) {
        angles[f] = encoding_angle(spec, x[f], static_cast<int>(f));
    }
    return angles;
}

} // namespace

std::array<int, 3> AnsatzSpec::param_coords(int index) const {
    const int rotations = rotations_per_qubit();
    const int slot = index % rotations;
    const int rest = index / rotations;
    return {rest / n_qubits, rest % n_qubits, slot};
}

int AnsatzSpec::total_entangler_slots() const {
    int total = 0;
    for (const auto &layer : entangler_slots) {
        total += static_cast<int>(layer.size());
    }
    return total;
}

void AnsatzSpec::validate() const {
    if (n_qubits < 1 || n_qubits > 20) {
        throw ConfigError("ansatz n_qubits must be in [1, 20], got " +
                          std::to_string(n_qubits));
    }
    if (n_layers < 1) {
        throw ConfigError("ansatz n_layers must be >= 1, got " +
                          std::to_string(n_layers));
    }
    if (rotation_axes.empty()) {
        throw ConfigError("ansatz rotation_axes must not be empty");
    }
    if (encoding_map.size() != static_cast<std::size_t>(n_qubits)) {
        throw ConfigError("encoding map covers " +
                          std::to_string(encoding_map.size()) +
                          " qubits, ansatz has " + std::to_string(n_qubits));
    }
    for (int f : encoding_map) {
        if (f < 0) {
            throw ConfigError("encoding map entries must be >= 0, got " +
                              std::to_string(f));
        }
    }
    if (entangler_slots.size() != static_cast<std::size_t>(n_layers)) {
        throw ConfigError("entangler slot list covers " +
                          std::to_string(entangler_slots.size()) +
                          " layers, ansatz has " + std::to_string(n_layers));
    }
    for (const auto &layer : entangler_slots) {
        for (const CnotSlot &slot : layer) {
            if (slot.control < 0 || slot.control >= n_qubits ||
                slot.target < 0 || slot.target >= n_qubits) {
                throw ConfigError("entangler slot (" +
                                  std::to_string(slot.control) + ", " +
                                  std::to_string(slot.target) +
                                  ") out of range");
            }
            if (slot.control == slot.target) {
                throw ConfigError("entangler slot control equals target (" +
                                  std::to_string(slot.control) + ")");
            }
        }
    }
    if (observable.terms.empty()) {
        throw ConfigError("observable must have at least one term");
    }
    for (const Observable::Term &t : observable.terms) {
        if (t.qubit < 0 || t.qubit >= n_qubits) {
            throw ConfigError("observable qubit " + std::to_string(t.qubit) +
                              " out of range");
        }
    }
}

std::vector<CnotSlot> chain_entangler_slots(int n_qubits, int passes) {
    std::vector<CnotSlot> slots;
    slots.reserve(static_cast<std::size_t>(passes) * (n_qubits - 1));
    for (int p = 0; p < passes; ++p) {
        for (int q = 0; q + 1 < n_qubits; ++q) {
            slots.push_back({q, q + 1});
        }
    }
    return slots;
}

AnsatzSpec AnsatzSpec::hardware_efficient(int n_qubits, int n_layers,
                                          Observable observable,
                                          std::vector<int> encoding_map) {
    AnsatzSpec spec;
    spec.n_qubits = n_qubits;
    spec.n_layers = n_layers;
    spec.rotation_axes = {Axis::RZ, Axis::RY, Axis::RZ};
    spec.entangler_slots.assign(
        n_layers, chain_entangler_slots(n_qubits, spec.rotations_per_qubit()));
    spec.encoding_map = std::move(encoding_map);
    spec.encoding_fn = EncodingFn::Arcsin;
    spec.observable = std::move(observable);
    spec.validate();
    return spec;
}

AnsatzSpec AnsatzSpec::regression_default(int n_layers) {
    return hardware_efficient(5, n_layers, Observable::z(0), {0, 0, 0, 0, 0});
}

AnsatzSpec AnsatzSpec::classification_default(int n_layers) {
    return hardware_efficient(5, n_layers, Observable::z_minus_z(0, 1),
                              {0, 1, 0, 1, 0});
}

DropoutMask DropoutMask::all_true(const AnsatzSpec &spec) {
    DropoutMask mask;
    mask.keep.resize(spec.entangler_slots.size());
    for (std::size_t l = 0; l < spec.entangler_slots.size(); ++l) {
        mask.keep[l].assign(spec.entangler_slots[l].size(), 1);
    }
    return mask;
}

int DropoutMask::removed_count() const {
    int removed = 0;
    for (const auto &layer : keep) {
        for (std::uint8_t k : layer) {
            removed += k ? 0 : 1;
        }
    }
    return removed;
}

int DropoutMask::kept_count() const {
    int kept = 0;
    for (const auto &layer : keep) {
        for (std::uint8_t k : layer) {
            kept += k ? 1 : 0;
        }
    }
    return kept;
}

std::vector<Gate> encode_layer_gates(const AnsatzSpec &spec,
                                     std::span<const double> x) {
    const std::vector<double> angles = feature_angles_for(spec, x);
    return encode_layer_gates_from_angles(spec, angles);
}

std::vector<Gate> encode_layer_gates_from_angles(
    const AnsatzSpec &spec, std::span<const double> feature_angles) {
    std::vector<BoundGate> bound;
    bound.reserve(spec.n_qubits);
    append_encoding_layer(spec, feature_angles, bound);
    std::vector<Gate> gates;
    gates.reserve(bound.size());
    for (const BoundGate &bg : bound) {
        gates.push_back(bg.gate);
    }
    return gates;
}

std::vector<Gate> variational_layer_gates(const AnsatzSpec &spec, int layer,
                                          const ParamVector &params,
                                          const DropoutMask &mask) {
    if (layer < 0 || layer >= spec.n_layers) {
        throw ConfigError("layer index " + std::to_string(layer) +
                          " out of range for " + std::to_string(spec.n_layers) +
                          " layers");
    }
    check_params(spec, params);
    check_mask_shape(spec, mask);
    std::vector<BoundGate> bound;
    append_variational_layer(spec, layer, params, &mask, bound);
    std::vector<Gate> gates;
    gates.reserve(bound.size());
    for (const BoundGate &bg : bound) {
        gates.push_back(bg.gate);
    }
    return gates;
}

void build_circuit_from_angles(const AnsatzSpec &spec,
                               const ParamVector &params,
                               std::span<const double> feature_angles,
                               const DropoutMask *mask,
                               std::vector<BoundGate> &out) {
    check_params(spec, params);
    if (mask != nullptr) {
        check_mask_shape(spec, *mask);
    }
    const int rotations = spec.rotations_per_qubit();
    out.reserve(out.size() +
                static_cast<std::size_t>(spec.n_layers) *
                    (spec.n_qubits * (1 + rotations) +
                     spec.entangler_slots[0].size()));
    for (int layer = 0; layer < spec.n_layers; ++layer) {
        append_encoding_layer(spec, feature_angles, out);
        append_variational_layer(spec, layer, params, mask, out);
    }
}

void build_circuit(const AnsatzSpec &spec, const ParamVector &params,
                   std::span<const double> x, const DropoutMask *mask,
                   std::vector<BoundGate> &out) {
    const std::vector<double> angles = feature_angles_for(spec, x);
    build_circuit_from_angles(spec, params, angles, mask, out);
}

StateVector run_circuit(const AnsatzSpec &spec,
                        const std::vector<BoundGate> &circuit) {
    StateVector state = zero_state(spec.n_qubits);
    for (const BoundGate &bg : circuit) {
        apply_gate(state, bg.gate);
    }
    return state;
}

double forward_from_angles(const AnsatzSpec &spec, const ParamVector &params,
                           std::span<const double> feature_angles,
                           const DropoutMask *mask) {
    std::vector<BoundGate> circuit;
    build_circuit_from_angles(spec, params, feature_angles, mask, circuit);
    const StateVector state = run_circuit(spec, circuit);
    return expectation(state, spec.observable);
}

double forward(const AnsatzSpec &spec, const ParamVector &params,
               std::span<const double> x, const DropoutMask &mask) {
    const std::vector<double> angles = feature_angles_for(spec, x);
    return forward_from_angles(spec, params, angles, &mask);
}

double forward(const AnsatzSpec &spec, const ParamVector &params,
               std::span<const double> x) {
    const std::vector<double> angles = feature_angles_for(spec, x);
    return forward_from_angles(spec, params, angles, nullptr);
}

double forward(const AnsatzSpec &spec, const ParamVector &params, double x,
               const DropoutMask &mask) {
    return forward(spec, params, std::span<const double>(&x, 1), mask);
}

double forward(const AnsatzSpec &spec, const ParamVector &params, double x) {
    return forward(spec, params, std::span<const double>(&x, 1));
}

namespace {

std::array<double, 2> classifier_from_value(double f) {
    const double p0 = 1.0 / (1.0 + std::exp(-f));
    const double p1 = 1.0 / (1.0 + std::exp(f));
    return {p0, p1};
}

} // namespace

std::array<double, 2> classifier_output(const AnsatzSpec &spec,
                                        const ParamVector &params,
                                        std::span<const double> x,
                                        const DropoutMask &mask) {
    return classifier_from_value(forward(spec, params, x, mask));
}

std::array<double, 2> classifier_output(const AnsatzSpec &spec,
                                        const ParamVector &params,
                                        std::span<const double> x) {
    return classifier_from_value(forward(spec, params, x));
}

double FourierSpectrum::total_energy() const {
    double acc = 0.0;
    for (const cx &c : coefficients) {
        acc += std::norm(c);
    }
    return acc;
}

double FourierSpectrum::energy_outside(int band) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (std::abs(frequencies[i]) > band) {
            acc += std::norm(coefficients[i]);
        }
    }
    return acc;
}

std::vector<int> FourierSpectrum::support(double threshold) const {
    std::vector<int> result;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (std::abs(coefficients[i]) > threshold) {
            result.push_back(frequencies[i]);
        }
    }
    return result;
}

FourierSpectrum fourier_coefficients(const AnsatzSpec &spec,
                                     const ParamVector &params,
                                     int n_samples) {
    spec.validate();
    check_params(spec, params);
    for (int f : spec.encoding_map) {
        if (f != 0) {
            throw AnalysisError(
                "fourier_coefficients supports 1-D models only; the encoding "
                "map references feature " +
                std::to_string(f));
        }
    }
    const int band = spec.n_qubits * spec.n_layers;
    if (n_samples < 2 * band + 2) {
        throw ConfigError("fourier_coefficients needs n_samples >= " +
                          std::to_string(2 * band + 2) + ", got " +
                          std::to_string(n_samples));
    }

    const double pi = std::numbers::pi;
    std::vector<double> values(n_samples);
    for (int j = 0; j < n_samples; ++j) {
        const double u = -pi + 2.0 * pi * j / n_samples;
        values[j] = forward_from_angles(spec, params,
                                        std::span<const double>(&u, 1),
                                        nullptr);
    }

    // Direct DFT; the sample counts here are small enough that O(N^2) is
    // irrelevant next to the circuit evaluations above.
    FourierSpectrum spectrum;
    const int lo = -((n_samples - 1) / 2);
    const int hi = n_samples / 2;
    for (int w = lo; w <= hi; ++w) {
        cx acc(0.0, 0.0);
        for (int j = 0; j < n_samples; ++j) {
            const double u = -pi + 2.0 * pi * j / n_samples;
            acc += values[j] * std::polar(1.0, -w * u);
        }
        spectrum.frequencies.push_back(w);
        spectrum.coefficients.push_back(acc / static_cast<double>(n_samples));
    }
    return spectrum;
}

} // namespace entdrop
