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
 * Exact dense statevector simulation: single-qubit rotations, CNOT gates,
 * and expectation values of weighted sums of single-qubit Pauli-Z terms.
 *
 * Qubit ordering convention: qubit 0 is the leftmost (most significant)
 * tensor factor, so for an n-qubit register the basis index i carries the
 * value of qubit q in bit (n - 1 - q). Rotation gates implement
 * exp(-i * angle * P / 2) for P the corresponding Pauli; this convention is
 * fixed project-wide (the parameter-shift rule depends on it).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace entdrop {

using cx = std::complex<double>;

/// Dense amplitude vector over the 2^n computational basis states.
struct StateVector {
    int n_qubits = 0;
    std::vector<cx> amps;

    std::size_t dim() const { return amps.size(); }
};

/// |0...0> on `n_qubits` qubits. Dense simulation is restricted to
/// 1 <= n_qubits <= 20.
StateVector zero_state(int n_qubits);

/// Squared 2-norm of the amplitudes; 1 for any valid state.
double norm_squared(const StateVector &state);

enum class GateKind { RX, RY, RZ, CNOT };

/// One gate of the circuit alphabet. Rotations use `target` and `angle`;
/// CNOT uses `control` and `target`.
struct Gate {
    GateKind kind = GateKind::RY;
    int target = 0;
    int control = -1;
    double angle = 0.0;

    static Gate rx(int target, double angle) {
        return Gate{GateKind::RX, target, -1, angle};
    }
    static Gate ry(int target, double angle) {
        return Gate{GateKind::RY, target, -1, angle};
    }
    static Gate rz(int target, double angle) {
        return Gate{GateKind::RZ, target, -1, angle};
    }
    static Gate cnot(int control, int target) {
        return Gate{GateKind::CNOT, target, control, 0.0};
    }

    /// Inverse gate: rotations negate the angle, CNOT is its own inverse.
    Gate inverse() const {
        Gate g = *this;
        if (g.kind != GateKind::CNOT) {
            g.angle = -g.angle;
        }
        return g;
    }

    bool operator==(const Gate &) const = default;
};

/// Applies `gate` to `state` in place. Norm is preserved to machine
/// precision per gate. Throws ConfigError on out-of-range qubit indices.
void apply_gate(StateVector &state, const Gate &gate);

/// Weighted sum of single-qubit Pauli-Z terms: sum_t weight_t * Z(qubit_t),
/// identity on all other qubits. Covers Z_1 (regression) and Z_1 - Z_2
/// (classification).
struct Observable {
    struct Term {
        double weight = 1.0;
        int qubit = 0;
        bool operator==(const Term &) const = default;
    };
    std::vector<Term> terms;

    static Observable z(int qubit) { return Observable{{{1.0, qubit}}}; }
    static Observable z_minus_z(int q0, int q1) {
        return Observable{{{1.0, q0}, {-1.0, q1}}};
    }

    /// sum |weight|; any expectation value lies in [-bound, +bound].
    double weight_bound() const;

    bool operator==(const Observable &) const = default;
};

/// <state| obs |state>. Real by construction since every term is diagonal
/// with real weights.
double expectation(const StateVector &state, const Observable &obs);

} // namespace entdrop
