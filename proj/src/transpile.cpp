/*
 * Copyright 2026 The lrqbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <numeric>
#include <stdexcept>

#include "lrq/circuit.hpp"
#include "lrq/error.hpp"

namespace lrq {

Circuit transpile_swap_network(const ProblemInstance &instance, const RampSchedule &schedule,
                               std::span<const Qubit> chain_order) {
    if (instance.topology.kind() != TopologyKind::FullyConnected) {
        throw std::invalid_argument("swap-network routing needs a fully connected instance; use "
                                    "build_lr_qaoa for " +
                                    instance.topology.tag());
    }
    if (schedule.p == 0 || schedule.betas.size() != schedule.p || schedule.gammas.size() != schedule.p) {
        throw std::invalid_argument("invalid schedule");
    }
    const std::size_t n = instance.n_nodes();
    std::vector<Qubit> physical(n);
    if (chain_order.empty()) {
        std::iota(physical.begin(), physical.end(), Qubit{0});
    } else {
        if (chain_order.size() != n) {
            throw std::invalid_argument("chain order length does not match the instance size");
        }
        std::vector<bool> seen(n, false);
        for (Qubit q : chain_order) {
            if (q >= n || seen[q]) {
                throw std::invalid_argument("chain order is not a permutation");
            }
            seen[q] = true;
        }
        physical.assign(chain_order.begin(), chain_order.end());
    }

    std::vector<double> weight(n * n, 0.0);
    for (const auto &e : instance.graph.edges()) {
        weight[e.u * n + e.v] = weight[e.v * n + e.u] = e.w;
    }

    // resident[pos] = logical qubit currently at line position pos.
    std::vector<Qubit> resident(n);
    std::iota(resident.begin(), resident.end(), Qubit{0});

    Circuit c(n, Basis::RoutedZZ);
    for (Qubit q = 0; q < n; ++q) {
        c.append(Gate::h(q));
    }
    for (std::size_t k = 0; k < schedule.p; ++k) {
        const double gamma = schedule.gammas[k];
        for (std::size_t round = 0; round < n; ++round) {
            for (std::size_t pos = round % 2; pos + 1 < n; pos += 2) {
                const Qubit a = resident[pos];
                const Qubit b = resident[pos + 1];
                const double w = weight[a * n + b];
                if (w != 0.0) {
                    c.append(Gate::rzz(2.0 * gamma * w, physical[pos], physical[pos + 1]));
                }
                c.append(Gate::swap(physical[pos], physical[pos + 1]));
                std::swap(resident[pos], resident[pos + 1]);
            }
        }
        const double beta = schedule.betas[k];
        for (Qubit q = 0; q < n; ++q) {
            c.append(Gate::rx(-2.0 * beta, q));
        }
    }
    c.append(Gate::measure_all());

    std::vector<Qubit> layout(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        layout[resident[pos]] = physical[pos];
    }
    c.set_layout(std::move(layout));
    return c;
}

namespace {

void emit_cnot(Circuit &out, Basis basis, Qubit control, Qubit target) {
    if (basis == Basis::CNOT) {
        out.append(Gate::cnot(control, target));
    } else {
        out.append(Gate::h(target));
        out.append(Gate::cz(control, target));
        out.append(Gate::h(target));
    }
}

bool same_pair(const Gate &a, const Gate &b) {
    return (a.qubits[0] == b.qubits[0] && a.qubits[1] == b.qubits[1]) ||
           (a.qubits[0] == b.qubits[1] && a.qubits[1] == b.qubits[0]);
}

}  // namespace

Circuit decompose_to_basis(const Circuit &circuit, Basis basis) {
    const Basis from = circuit.basis();
    if (basis == Basis::ISwapLike) {
        throw std::invalid_argument("unknown basis for decomposition: iswap is a count model only");
    }
    if (from == basis) {
        return circuit;
    }
    if (from != Basis::AbstractZZ && from != Basis::RoutedZZ) {
        throw std::invalid_argument("decomposition starts from abstract_zz or routed_zz, got " +
                                    std::string(basis_tag(from)));
    }
    if (basis == Basis::AbstractZZ) {
        throw std::invalid_argument("a routed circuit cannot be expressed in abstract_zz");
    }
    if (basis == Basis::RoutedZZ) {
        Circuit out(circuit.n_qubits(), Basis::RoutedZZ);
        for (const auto &g : circuit.gates()) {
            out.append(g);
        }
        out.set_layout(circuit.layout());
        return out;
    }

    // FractionalZZ keeps RZZ native and expands SWAPs over CZ.
    const Basis two_qubit_basis = basis == Basis::FractionalZZ ? Basis::CZ : basis;
    Circuit out(circuit.n_qubits(), basis);
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        switch (g.kind) {
            case GateKind::H:
            case GateKind::RX:
            case GateKind::RZ:
            case GateKind::MeasureAll:
                out.append(g);
                break;
            case GateKind::RZZ: {
                if (basis == Basis::FractionalZZ) {
                    out.append(g);
                    break;
                }
                const Qubit a = g.qubits[0];
                const Qubit b = g.qubits[1];
                const bool merge = i + 1 < gates.size() && gates[i + 1].kind == GateKind::SWAP &&
                                   same_pair(g, gates[i + 1]);
                // CX(a,b) RZ(b) CX(a,b), and with a following SWAP
                // CX(a,b) CX(b,a) CX(a,b) the two adjacent CX(a,b) cancel.
                emit_cnot(out, two_qubit_basis, a, b);
                out.append(Gate::rz(g.theta, b));
                if (merge) {
                    emit_cnot(out, two_qubit_basis, b, a);
                    emit_cnot(out, two_qubit_basis, a, b);
                    ++i;
                } else {
                    emit_cnot(out, two_qubit_basis, a, b);
                }
                break;
            }
            case GateKind::SWAP: {
                const Qubit a = g.qubits[0];
                const Qubit b = g.qubits[1];
                emit_cnot(out, two_qubit_basis, a, b);
                emit_cnot(out, two_qubit_basis, b, a);
                emit_cnot(out, two_qubit_basis, a, b);
                break;
            }
            case GateKind::CZ:
            case GateKind::CNOT:
                throw std::logic_error("unexpected gate in abstract circuit");
        }
    }
    out.set_layout(circuit.layout());
    return out;
}

}  // namespace lrq
