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

#include "entdrop/statevector.hpp"

#include <cmath>
#include <string>

#include "entdrop/errors.hpp"

namespace entdrop {

namespace {

// Bit position of qubit q in a basis index (qubit 0 is the most significant).
inline std::size_t qubit_bit(int n_qubits, int qubit) {
    return static_cast<std::size_t>(n_qubits - 1 - qubit);
}

void check_qubit(const StateVector &state, int qubit, const char *what) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw ConfigError(std::string(what) + " qubit index " +
                          std::to_string(qubit) + " out of range for " +
                          std::to_string(state.n_qubits) + " qubits");
    }
}

// Generic 2x2 unitary on one qubit. Complex products are written out on
// purpose: the pairwise update is the innermost loop of every evaluation.
void apply_one_qubit(StateVector &state, int qubit, cx u00, cx u01, cx u10,
                     cx u11) {
    const std::size_t mask = std::size_t{1} << qubit_bit(state.n_qubits, qubit);
    const std::size_t dim = state.dim();
    const double a00r = u00.real(), a00i = u00.imag();
    const double a01r = u01.real(), a01i = u01.imag();
    const double a10r = u10.real(), a10i = u10.imag();
    const double a11r = u11.real(), a11i = u11.imag();
    cx *amps = state.amps.data();
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t off = 0; off < mask; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + mask;
            const double x0r = amps[i0].real(), x0i = amps[i0].imag();
            const double x1r = amps[i1].real(), x1i = amps[i1].imag();
            amps[i0] = cx(a00r * x0r - a00i * x0i + a01r * x1r - a01i * x1i,
                          a00r * x0i + a00i * x0r + a01r * x1i + a01i * x1r);
            amps[i1] = cx(a10r * x0r - a10i * x0i + a11r * x1r - a11i * x1i,
                          a10r * x0i + a10i * x0r + a11r * x1i + a11i * x1r);
        }
    }
}

// RZ is diagonal; one complex multiply per amplitude.
void apply_rz(StateVector &state, int qubit, double angle) {
    const std::size_t mask = std::size_t{1} << qubit_bit(state.n_qubits, qubit);
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    // exp(-i a/2) on |0>, exp(+i a/2) on |1>.
    const std::size_t dim = state.dim();
    cx *amps = state.amps.data();
    for (std::size_t i = 0; i < dim; ++i) {
        const double xr = amps[i].real(), xi = amps[i].imag();
        if (i & mask) {
            amps[i] = cx(c * xr - s * xi, c * xi + s * xr);
        } else {
            amps[i] = cx(c * xr + s * xi, c * xi - s * xr);
        }
    }
}

void apply_cnot(StateVector &state, int control, int target) {
    const std::size_t cmask =
        std::size_t{1} << qubit_bit(state.n_qubits, control);
    const std::size_t tmask =
        std::size_t{1} << qubit_bit(state.n_qubits, target);
    const std::size_t dim = state.dim();
    cx *amps = state.amps.data();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

} // namespace

StateVector zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 20) {
        throw ConfigError("zero_state: n_qubits must be in [1, 20], got " +
                          std::to_string(n_qubits));
    }
    StateVector state;
    state.n_qubits = n_qubits;
    state.amps.assign(std::size_t{1} << n_qubits, cx(0.0, 0.0));
    state.amps[0] = cx(1.0, 0.0);
    return state;
}

double norm_squared(const StateVector &state) {
    double acc = 0.0;
    for (const cx &a : state.amps) {
        acc += a.real() * a.real() + a.imag() * a.imag();
    }
    return acc;
}

void apply_gate(StateVector &state, const Gate &gate) {
    check_qubit(state, gate.target, "target");
    switch (gate.kind) {
    case GateKind::RX: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        apply_one_qubit(state, gate.target, cx(c, 0), cx(0, -s), cx(0, -s),
                        cx(c, 0));
        break;
    }
    case GateKind::RY: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        apply_one_qubit(state, gate.target, cx(c, 0), cx(-s, 0), cx(s, 0),
                        cx(c, 0));
        break;
    }
    case GateKind::RZ:
        apply_rz(state, gate.target, gate.angle);
        break;
    case GateKind::CNOT:
        check_qubit(state, gate.control, "control");
        if (gate.control == gate.target) {
            throw ConfigError("CNOT control and target must differ, both are " +
                              std::to_string(gate.target));
        }
        apply_cnot(state, gate.control, gate.target);
        break;
    }
}

double Observable::weight_bound() const {
    double acc = 0.0;
    for (const Term &t : terms) {
        acc += std::abs(t.weight);
    }
    return acc;
}

double expectation(const StateVector &state, const Observable &obs) {
    double result = 0.0;
    for (const Observable::Term &term : obs.terms) {
        check_qubit(state, term.qubit, "observable");
        const std::size_t mask =
            std::size_t{1} << qubit_bit(state.n_qubits, term.qubit);
        double z = 0.0;
        const std::size_t dim = state.dim();
        for (std::size_t i = 0; i < dim; ++i) {
            const double p = state.amps[i].real() * state.amps[i].real() +
                             state.amps[i].imag() * state.amps[i].imag();
            z += (i & mask) ? -p : p;
        }
        result += term.weight * z;
    }
    return result;
}

} // namespace entdrop
