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

#ifndef LRQ_SIMULATOR_HPP
#define LRQ_SIMULATOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrq/circuit.hpp"
#include "lrq/problems.hpp"
#include "lrq/rng.hpp"

namespace lrq {

using Amplitude = std::complex<double>;

/// Dense state over n qubits; amplitude index bit i is qubit i.
class StateVector {
   public:
    StateVector() = default;
    /// |0...0>
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

    void apply(const Gate &gate);
    /// Pauli on one qubit: 0 = I, 1 = X, 2 = Y, 3 = Z.
    void apply_pauli(int pauli, Qubit q);

   private:
    void apply_1q(Qubit q, Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11);

    std::size_t n_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Two-qubit depolarizing noise: after every two-qubit gate, with
/// probability eps_2q one of the 15 non-identity two-qubit Paulis is applied,
/// chosen uniformly. Single-qubit gates and readout are noiseless.
struct NoiseModel {
    double eps_2q = 0.0;
    std::uint64_t rng_seed = 0;
};

/// Measured bitstrings (logical node order) with multiplicities.
struct SampleSet {
    std::size_t n_qubits = 0;
    std::map<Bitstring, std::uint64_t> counts;
    std::uint64_t shots = 0;

    void add(const Bitstring &bits, std::uint64_t count = 1);
    friend bool operator==(const SampleSet &, const SampleSet &) = default;
};

/// Qubit cap for dense simulation: LRQ_SIM_CAP when set, otherwise 24.
std::size_t simulation_cap();

/// Noiseless state of the circuit in physical qubit order (MEASURE_ALL is
/// ignored). Throws ResourceError above simulation_cap().
StateVector simulate(const Circuit &circuit);

/// One Pauli trajectory of the noisy circuit, drawing errors from `noise_rng`.
StateVector simulate_trajectory(const Circuit &circuit, double eps_2q, Rng &noise_rng);

/// Reorders a physical-order state so that index bit i is logical qubit i,
/// where layout[i] is the physical qubit of logical i.
StateVector to_logical_order(const StateVector &state, std::span<const Qubit> layout);

struct TrajectoryOptions {
    /// Number of noise trajectories; 0 means one per shot. Shots are split
    /// as evenly as possible across trajectories.
    std::uint64_t trajectories = 0;
};

/// Samples the circuit. Outcomes are mapped back to logical order through
/// the circuit layout. Deterministic for fixed (circuit, shots, noise, seed).
SampleSet sample(const Circuit &circuit, std::uint64_t shots, const NoiseModel &noise,
                 std::uint64_t seed, TrajectoryOptions options = {});

/// Sum over x of |amp_x|^2 C(x) for a logical-order state.
double expected_cost(const StateVector &state, const ProblemInstance &instance);

/// Expected cut of the circuit's output state averaged over `trajectories`
/// independent noise trajectories (exact when eps is 0).
double noisy_expected_cost(const Circuit &circuit, const ProblemInstance &instance,
                           const NoiseModel &noise, std::uint64_t trajectories);

// Sample files: header "lrq-samples v1 nq=<n> shots=<s>", then one
// "<bitstring> <count>" line per outcome, character i = node i.
std::string samples_to_text(const SampleSet &samples);
/// Parses sample text. The header is optional; `expected_width`, when given,
/// must match every bitstring. Errors carry line numbers.
SampleSet samples_from_text(std::string_view text, std::optional<std::size_t> expected_width = {});

}  // namespace lrq

#endif
