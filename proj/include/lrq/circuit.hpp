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

#ifndef LRQ_CIRCUIT_HPP
#define LRQ_CIRCUIT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrq/problems.hpp"
#include "lrq/schedule.hpp"

namespace lrq {

using Qubit = std::uint32_t;

enum class GateKind { H, RX, RZ, RZZ, CZ, CNOT, SWAP, MeasureAll };

/// One gate. Rotations follow R_P(theta) = exp(-i theta/2 P); CNOT operands
/// are (control, target).
struct Gate {
    GateKind kind = GateKind::H;
    std::array<Qubit, 2> qubits{};
    double theta = 0.0;

    static Gate h(Qubit q) { return {GateKind::H, {q, 0}, 0.0}; }
    static Gate rx(double theta, Qubit q) { return {GateKind::RX, {q, 0}, theta}; }
    static Gate rz(double theta, Qubit q) { return {GateKind::RZ, {q, 0}, theta}; }
    static Gate rzz(double theta, Qubit a, Qubit b) { return {GateKind::RZZ, {a, b}, theta}; }
    static Gate cz(Qubit a, Qubit b) { return {GateKind::CZ, {a, b}, 0.0}; }
    static Gate cnot(Qubit control, Qubit target) { return {GateKind::CNOT, {control, target}, 0.0}; }
    static Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, {a, b}, 0.0}; }
    static Gate measure_all() { return {GateKind::MeasureAll, {0, 0}, 0.0}; }

    bool is_two_qubit() const;
    bool is_single_qubit() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Gate set a circuit is expressed in.
///
///   AbstractZZ    H, RX, RZZ
///   RoutedZZ      AbstractZZ plus SWAP (output of the line router)
///   FractionalZZ  native RZZ next to H, RX, RZ, CZ
///   CZ            H, RX, RZ, CZ
///   CNOT          H, RX, RZ, CNOT
///   ISwapLike     count model only; no executable decomposition
///
/// Every basis also allows the final MEASURE_ALL.
enum class Basis { AbstractZZ, RoutedZZ, FractionalZZ, CZ, CNOT, ISwapLike };

std::string_view basis_tag(Basis basis);
Basis parse_basis(std::string_view tag);
bool basis_allows(Basis basis, GateKind kind);

class Circuit {
   public:
    Circuit() = default;
    Circuit(std::size_t n_qubits, Basis basis);

    /// Validates operands and basis membership before appending.
    void append(const Gate &gate);

    std::size_t n_qubits() const { return n_qubits_; }
    Basis basis() const { return basis_; }
    const std::vector<Gate> &gates() const { return gates_; }

    /// layout()[logical] = physical qubit holding that logical qubit at the
    /// end of the circuit.
    const std::vector<Qubit> &layout() const { return layout_; }
    void set_layout(std::vector<Qubit> layout);
    bool has_identity_layout() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

   private:
    std::size_t n_qubits_ = 0;
    Basis basis_ = Basis::AbstractZZ;
    std::vector<Gate> gates_;
    std::vector<Qubit> layout_;
};

/// Gate tallies. n_zz_logical counts RZZ gates plus the RZ rotations that
/// decomposed RZZ gates leave behind.
struct CountReport {
    std::uint64_t n_two_qubit = 0;
    std::uint64_t n_zz_logical = 0;
    std::uint64_t two_qubit_depth = 0;
    std::uint64_t n_single_qubit = 0;

    friend bool operator==(const CountReport &, const CountReport &) = default;
};

/// Tallies the circuit. Depth is greedy ASAP layering of two-qubit gates
/// over disjoint operand sets; single-qubit gates add no depth.
CountReport count_gates(const Circuit &circuit);

/// Color classes of a proper edge coloring, each listing canonical edge
/// indices in increasing order. Bipartite graphs get exactly max-degree
/// colors; other graphs a greedy coloring.
std::vector<std::vector<std::size_t>> edge_coloring(const WeightedGraph &graph);

/// Order of the ZZ terms inside one cost layer: canonical order for fully
/// connected instances, color-major order for every sparse topology.
std::vector<Edge> cost_layer_order(const ProblemInstance &instance);

/// H on every qubit, then per layer k the RZZ(2 gamma_k w) terms followed by
/// RX(-2 beta_k) on every qubit, then MEASURE_ALL. The mixer sign makes the
/// |+> start state the ground state of the mixer, so the ramp drives toward
/// the maximum cut.
Circuit build_lr_qaoa(const ProblemInstance &instance, const RampSchedule &schedule);

/// Fully connected instance routed on a line by an odd-even transposition
/// network. `chain_order[pos]` is the physical qubit at line position pos
/// (empty means the identity). Each pair operation is RZZ followed by SWAP.
/// The logical order ends each layer reversed and the next layer starts from
/// the reversed map.
Circuit transpile_swap_network(const ProblemInstance &instance, const RampSchedule &schedule,
                               std::span<const Qubit> chain_order = {});

/// Rewrites an AbstractZZ or RoutedZZ circuit into `basis`. An RZZ directly
/// followed by a SWAP on the same pair becomes three CNOTs after the two
/// middle CNOTs cancel.
Circuit decompose_to_basis(const Circuit &circuit, Basis basis);

/// Closed-form gate counts. For FullyConnected, CZ/CNOT/ISwapLike mean
/// line-routed execution and AbstractZZ/FractionalZZ mean an all-to-all
/// device with native ZZ. Chain depths assume n >= 3.
CountReport predicted_counts(const Topology &topology, Basis basis, std::size_t p, std::size_t n,
                             std::size_t n_edges);

enum class CircuitFormat { Neutral, Qasm2 };

std::string export_circuit(const Circuit &circuit, CircuitFormat format = CircuitFormat::Neutral);
/// Reads either format (detected from the first line).
Circuit import_circuit(std::string_view text);

}  // namespace lrq

#endif
