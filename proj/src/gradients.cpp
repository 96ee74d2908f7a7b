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

#include "entdrop/gradients.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entdrop/errors.hpp"

namespace entdrop {

namespace {

enum class Pauli { X, Y, Z };

Pauli pauli_for(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return Pauli::X;
    case GateKind::RY:
        return Pauli::Y;
    case GateKind::RZ:
        return Pauli::Z;
    case GateKind::CNOT:
        break;
    }
    throw ConfigError("gate has no generator Pauli");
}

// Im(<bra| P_qubit |ket>), the adjoint-method derivative contribution of a
// rotation exp(-i theta P / 2).
double im_pauli_inner(const StateVector &bra, const StateVector &ket,
                      Pauli pauli, int qubit) {
    const std::size_t mask = std::size_t{1}
                             << static_cast<std::size_t>(bra.n_qubits - 1 -
                                                         qubit);
    const std::size_t dim = bra.dim();
    cx acc(0.0, 0.0);
    switch (pauli) {
    case Pauli::Z:
        for (std::size_t i = 0; i < dim; ++i) {
            const double sign = (i & mask) ? -1.0 : 1.0;
            acc += std::conj(bra.amps[i]) * (sign * ket.amps[i]);
        }
        break;
    case Pauli::X:
        for (std::size_t i0 = 0; i0 < dim; ++i0) {
            if (i0 & mask) {
                continue;
            }
            const std::size_t i1 = i0 | mask;
            acc += std::conj(bra.amps[i0]) * ket.amps[i1] +
                   std::conj(bra.amps[i1]) * ket.amps[i0];
        }
        break;
    case Pauli::Y:
        for (std::size_t i0 = 0; i0 < dim; ++i0) {
            if (i0 & mask) {
                continue;
            }
            const std::size_t i1 = i0 | mask;
            acc += std::conj(bra.amps[i0]) * (cx(0.0, -1.0) * ket.amps[i1]) +
                   std::conj(bra.amps[i1]) * (cx(0.0, 1.0) * ket.amps[i0]);
        }
        break;
    }
    return acc.imag();
}

// bra_i = (sum_t w_t Z_t)_ii * ket_i; the observable is diagonal.
StateVector apply_observable(const StateVector &ket, const Observable &obs) {
    StateVector bra = ket;
    const std::size_t dim = ket.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        double d = 0.0;
        for (const Observable::Term &t : obs.terms) {
            const std::size_t mask =
                std::size_t{1}
                << static_cast<std::size_t>(ket.n_qubits - 1 - t.qubit);
            d += (i & mask) ? -t.weight : t.weight;
        }
        bra.amps[i] = d * ket.amps[i];
    }
    return bra;
}

GradientVector adjoint_grad_circuit(const AnsatzSpec &spec,
                                    const std::vector<BoundGate> &circuit,
                                    double *value) {
    StateVector ket = run_circuit(spec, circuit);
    if (value != nullptr) {
        *value = expectation(ket, spec.observable);
    }
    StateVector bra = apply_observable(ket, spec.observable);

    GradientVector grad(spec.param_count());
    for (std::size_t k = circuit.size(); k-- > 0;) {
        const BoundGate &bg = circuit[k];
        if (bg.param_index >= 0) {
            grad[bg.param_index] = im_pauli_inner(
                bra, ket, pauli_for(bg.gate.kind), bg.gate.target);
        }
        const Gate inv = bg.gate.inverse();
        apply_gate(ket, inv);
        apply_gate(bra, inv);
    }
    return grad;
}

GradientVector shift_grad_impl(const AnsatzSpec &spec,
                               const ParamVector &params,
                               std::span<const double> x,
                               const DropoutMask *mask) {
    const double half_pi = std::numbers::pi / 2.0;
    ParamVector shifted = params;
    GradientVector grad(spec.param_count());
    for (int i = 0; i < spec.param_count(); ++i) {
        shifted[i] = params[i] + half_pi;
        const double plus = mask ? forward(spec, shifted, x, *mask)
                                 : forward(spec, shifted, x);
        shifted[i] = params[i] - half_pi;
        const double minus = mask ? forward(spec, shifted, x, *mask)
                                  : forward(spec, shifted, x);
        shifted[i] = params[i];
        grad[i] = 0.5 * (plus - minus);
    }
    return grad;
}

GradientVector adjoint_grad_impl(const AnsatzSpec &spec,
                                 const ParamVector &params,
                                 std::span<const double> x,
                                 const DropoutMask *mask, double *value) {
    std::vector<BoundGate> circuit;
    build_circuit(spec, params, x, mask, circuit);
    return adjoint_grad_circuit(spec, circuit, value);
}

double sigmoid(double f) { return 1.0 / (1.0 + std::exp(-f)); }

template <typename PointGrad>
GradientVector accumulate_cost_gradient(const AnsatzSpec &spec,
                                        std::size_t n_points,
                                        PointGrad &&point_grad) {
    if (n_points == 0) {
        throw ConfigError("cost_gradient needs a nonempty dataset");
    }
    GradientVector total(spec.param_count());
    // Fixed summation order keeps runs bit-reproducible.
    for (std::size_t k = 0; k < n_points; ++k) {
        point_grad(k, total);
    }
    return total;
}

} // namespace

bool GradientVector::all_finite() const {
    for (double v : values) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

GradientVector parameter_shift_grad(const AnsatzSpec &spec,
                                    const ParamVector &params,
                                    std::span<const double> x,
                                    const DropoutMask &mask) {
    return shift_grad_impl(spec, params, x, &mask);
}

GradientVector parameter_shift_grad(const AnsatzSpec &spec,
                                    const ParamVector &params,
                                    std::span<const double> x) {
    return shift_grad_impl(spec, params, x, nullptr);
}

GradientVector adjoint_grad(const AnsatzSpec &spec, const ParamVector &params,
                            std::span<const double> x, const DropoutMask &mask,
                            double *value) {
    return adjoint_grad_impl(spec, params, x, &mask, value);
}

GradientVector adjoint_grad(const AnsatzSpec &spec, const ParamVector &params,
                            std::span<const double> x, double *value) {
    return adjoint_grad_impl(spec, params, x, nullptr, value);
}

GradientVector cost_gradient(const AnsatzSpec &spec, const ParamVector &params,
                             const RegressionDataset &dataset,
                             const DropoutMask &mask, GradMethod method) {
    const double inv_d = 2.0 / static_cast<double>(dataset.points.size());
    return accumulate_cost_gradient(
        spec, dataset.points.size(),
        [&](std::size_t k, GradientVector &total) {
            const RegressionPoint &p = dataset.points[k];
            const std::span<const double> x(&p.x, 1);
            double f = 0.0;
            GradientVector g;
            if (method == GradMethod::Adjoint) {
                g = adjoint_grad(spec, params, x, mask, &f);
            } else {
                f = forward(spec, params, x, mask);
                g = parameter_shift_grad(spec, params, x, mask);
            }
            const double coeff = inv_d * (f - p.y);
            for (std::size_t i = 0; i < total.size(); ++i) {
                total[i] += coeff * g[i];
            }
        });
}

GradientVector cost_gradient(const AnsatzSpec &spec, const ParamVector &params,
                             const ClassificationDataset &dataset,
                             const DropoutMask &mask, GradMethod method) {
    return accumulate_cost_gradient(
        spec, dataset.points.size(),
        [&](std::size_t k, GradientVector &total) {
            const ClassificationPoint &p = dataset.points[k];
            const std::span<const double> x(p.x.data(), p.x.size());
            double f = 0.0;
            GradientVector g;
            if (method == GradMethod::Adjoint) {
                g = adjoint_grad(spec, params, x, mask, &f);
            } else {
                f = forward(spec, params, x, mask);
                g = parameter_shift_grad(spec, params, x, mask);
            }
            const double coeff = sigmoid(f) - p.y[0];
            for (std::size_t i = 0; i < total.size(); ++i) {
                total[i] += coeff * g[i];
            }
        });
}

} // namespace entdrop
