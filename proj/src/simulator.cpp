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

#include "lrq/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <stdexcept>

#include "lrq/error.hpp"
#include "lrq/parallel.hpp"

namespace lrq {

namespace {

constexpr std::size_t kDefaultSimulationCap = 24;
constexpr double kRenormalizeThreshold = 1e-8;

std::atomic<bool> drift_warned{false};

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
    amps_[0] = 1.0;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

void StateVector::apply_1q(Qubit q, Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11) {
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Amplitude a0 = amps_[i];
            const Amplitude a1 = amps_[i + stride];
            amps_[i] = m00 * a0 + m01 * a1;
            amps_[i + stride] = m10 * a0 + m11 * a1;
        }
    }
}

void StateVector::apply(const Gate &gate) {
    const Qubit a = gate.qubits[0];
    const Qubit b = gate.qubits[1];
    const std::size_t size = amps_.size();
    switch (gate.kind) {
        case GateKind::H: {
            const double s = 1.0 / std::sqrt(2.0);
            apply_1q(a, s, s, s, -s);
            break;
        }
        case GateKind::RX: {
            const double c = std::cos(gate.theta / 2);
            const double s = std::sin(gate.theta / 2);
            apply_1q(a, c, Amplitude(0, -s), Amplitude(0, -s), c);
            break;
        }
        case GateKind::RZ: {
            const Amplitude lo = std::polar(1.0, -gate.theta / 2);
            const Amplitude hi = std::polar(1.0, gate.theta / 2);
            const std::size_t bit = std::size_t{1} << a;
            for (std::size_t i = 0; i < size; ++i) {
                amps_[i] *= (i & bit) ? hi : lo;
            }
            break;
        }
        case GateKind::RZZ: {
            const Amplitude even = std::polar(1.0, -gate.theta / 2);
            const Amplitude odd = std::polar(1.0, gate.theta / 2);
            for (std::size_t i = 0; i < size; ++i) {
                amps_[i] *= (((i >> a) ^ (i >> b)) & 1U) ? odd : even;
            }
            break;
        }
        case GateKind::CZ: {
            const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & mask) == mask) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
        }
        case GateKind::CNOT: {
            const std::size_t cbit = std::size_t{1} << a;
            const std::size_t tbit = std::size_t{1} << b;
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & cbit) && !(i & tbit)) {
                    std::swap(amps_[i], amps_[i | tbit]);
                }
            }
            break;
        }
        case GateKind::SWAP: {
            const std::size_t abit = std::size_t{1} << a;
            const std::size_t bbit = std::size_t{1} << b;
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & abit) && !(i & bbit)) {
                    std::swap(amps_[i], amps_[(i ^ abit) | bbit]);
                }
            }
            break;
        }
        case GateKind::MeasureAll:
            break;
    }
}

void StateVector::apply_pauli(int pauli, Qubit q) {
    switch (pauli) {
        case 1:
            apply_1q(q, 0, 1, 1, 0);
            break;
        case 2:
            apply_1q(q, 0, Amplitude(0, -1), Amplitude(0, 1), 0);
            break;
        case 3:
            apply_1q(q, 1, 0, 0, -1);
            break;
        default:
            break;
    }
}

void SampleSet::add(const Bitstring &bits, std::uint64_t count) {
    if (bits.size() != n_qubits) {
        throw std::invalid_argument("sample width " + std::to_string(bits.size()) + " does not match " +
                                    std::to_string(n_qubits) + " qubits");
    }
    auto &slot = counts[bits];
    if (slot > UINT64_MAX - count || shots > UINT64_MAX - count) {
        throw std::overflow_error("sample count overflow");
    }
    slot += count;
    shots += count;
}

std::size_t simulation_cap() {
    if (const char *env = std::getenv("LRQ_SIM_CAP")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 63) {
            return v;
        }
    }
    return kDefaultSimulationCap;
}

namespace {

void check_cap(const Circuit &circuit) {
    const std::size_t cap = simulation_cap();
    if (circuit.n_qubits() > cap) {
        throw ResourceError("circuit has " + std::to_string(circuit.n_qubits()) +
                            " qubits; simulation cap is " + std::to_string(cap) + " (set LRQ_SIM_CAP)");
    }
}

// Applies the circuit, checking the norm once per n_qubits gates.
StateVector run(const Circuit &circuit, double eps, Rng *noise_rng) {
    check_cap(circuit);
    StateVector state(circuit.n_qubits());
    const std::size_t check_every = std::max<std::size_t>(circuit.n_qubits(), 1);
    std::size_t since_check = 0;
    for (const auto &g : circuit.gates()) {
        state.apply(g);
        if (eps > 0.0 && g.is_two_qubit() && noise_rng->uniform() < eps) {
            const int which = 1 + static_cast<int>(noise_rng->below(15));
            state.apply_pauli(which & 3, g.qubits[0]);
            state.apply_pauli(which >> 2, g.qubits[1]);
        }
        if (++since_check == check_every) {
            since_check = 0;
            const double norm = state.norm_squared();
            if (std::abs(norm - 1.0) > kRenormalizeThreshold) {
                if (!drift_warned.exchange(true)) {
                    std::cerr << "lrq: warning: state norm drifted to " << norm << "; renormalizing\n";
                }
                const double scale = 1.0 / std::sqrt(norm);
                for (auto &a : state.amplitudes()) {
                    a *= scale;
                }
            }
        }
    }
    return state;
}

Bitstring logical_bits(std::uint64_t physical_index, std::span<const Qubit> layout) {
    Bitstring bits(layout.size());
    for (std::size_t i = 0; i < layout.size(); ++i) {
        bits.set(i, (physical_index >> layout[i]) & 1U);
    }
    return bits;
}

std::vector<double> cumulative(const StateVector &state) {
    std::vector<double> cdf = state.probabilities();
    std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
    return cdf;
}

std::uint64_t draw_index(const std::vector<double> &cdf, Rng &rng) {
    const double u = rng.uniform() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                               static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

// table[idx] = cut of the physical basis state idx.
std::vector<double> physical_cost_table(const WeightedGraph &graph, std::span<const Qubit> layout) {
    const std::size_t size = std::size_t{1} << graph.n_nodes();
    std::vector<double> table(size, 0.0);
    for (const auto &e : graph.edges()) {
        const Qubit pu = layout[e.u];
        const Qubit pv = layout[e.v];
        for (std::size_t i = 0; i < size; ++i) {
            if (((i >> pu) ^ (i >> pv)) & 1U) {
                table[i] += e.w;
            }
        }
    }
    return table;
}

double weighted_sum(const StateVector &state, const std::vector<double> &table) {
    double total = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        total += std::norm(amps[i]) * table[i];
    }
    return total;
}

}  // namespace

StateVector simulate(const Circuit &circuit) { return run(circuit, 0.0, nullptr); }

StateVector simulate_trajectory(const Circuit &circuit, double eps_2q, Rng &noise_rng) {
    if (eps_2q < 0.0 || eps_2q > 1.0) {
        throw std::invalid_argument("eps_2q must lie in [0, 1]");
    }
    return run(circuit, eps_2q, &noise_rng);
}

StateVector to_logical_order(const StateVector &state, std::span<const Qubit> layout) {
    if (layout.size() != state.n_qubits()) {
        throw std::invalid_argument("layout size does not match the state");
    }
    StateVector out(state.n_qubits());
    const auto src = state.amplitudes();
    auto dst = out.amplitudes();
    for (std::size_t logical = 0; logical < src.size(); ++logical) {
        std::size_t physical = 0;
        for (std::size_t i = 0; i < layout.size(); ++i) {
            physical |= ((logical >> i) & 1U) << layout[i];
        }
        dst[logical] = src[physical];
    }
    return out;
}

SampleSet sample(const Circuit &circuit, std::uint64_t shots, const NoiseModel &noise, std::uint64_t seed,
                 TrajectoryOptions options) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (noise.eps_2q < 0.0 || noise.eps_2q > 1.0) {
        throw std::invalid_argument("eps_2q must lie in [0, 1]");
    }
    check_cap(circuit);
    const auto layout = circuit.layout();
    SampleSet out;
    out.n_qubits = circuit.n_qubits();

    if (noise.eps_2q == 0.0) {
        const auto cdf = cumulative(simulate(circuit));
        Rng rng(seed);
        std::map<std::uint64_t, std::uint64_t> tally;
        for (std::uint64_t s = 0; s < shots; ++s) {
            ++tally[draw_index(cdf, rng)];
        }
        for (const auto &[idx, count] : tally) {
            out.add(logical_bits(idx, layout), count);
        }
        return out;
    }

    const std::uint64_t n_traj =
        options.trajectories == 0 ? shots : std::min<std::uint64_t>(options.trajectories, shots);
    const std::uint64_t base = shots / n_traj;
    const std::uint64_t extra = shots % n_traj;
    std::vector<std::vector<std::uint64_t>> draws(n_traj);
    parallel_for(n_traj, [&](std::size_t t) {
        Rng noise_rng(derive_seed(noise.rng_seed, t));
        Rng draw_rng(derive_seed(seed, t));
        const auto cdf = cumulative(run(circuit, noise.eps_2q, &noise_rng));
        const std::uint64_t k = base + (t < extra ? 1 : 0);
        draws[t].reserve(k);
        for (std::uint64_t s = 0; s < k; ++s) {
            draws[t].push_back(draw_index(cdf, draw_rng));
        }
    });
    std::map<std::uint64_t, std::uint64_t> tally;
    for (const auto &d : draws) {
        for (auto idx : d) {
            ++tally[idx];
        }
    }
    for (const auto &[idx, count] : tally) {
        out.add(logical_bits(idx, layout), count);
    }
    return out;
}

double expected_cost(const StateVector &state, const ProblemInstance &instance) {
    if (state.n_qubits() != instance.n_nodes()) {
        throw std::invalid_argument("state has " + std::to_string(state.n_qubits()) + " qubits, instance has " +
                                    std::to_string(instance.n_nodes()) + " nodes");
    }
    std::vector<Qubit> identity(instance.n_nodes());
    std::iota(identity.begin(), identity.end(), Qubit{0});
    return weighted_sum(state, physical_cost_table(instance.graph, identity));
}

double noisy_expected_cost(const Circuit &circuit, const ProblemInstance &instance, const NoiseModel &noise,
                           std::uint64_t trajectories) {
    if (circuit.n_qubits() != instance.n_nodes()) {
        throw std::invalid_argument("circuit width does not match the instance");
    }
    check_cap(circuit);
    const auto table = physical_cost_table(instance.graph, circuit.layout());
    if (noise.eps_2q == 0.0) {
        return weighted_sum(simulate(circuit), table);
    }
    if (trajectories == 0) {
        throw std::invalid_argument("need at least one trajectory");
    }
    std::vector<double> values(trajectories);
    parallel_for(trajectories, [&](std::size_t t) {
        Rng noise_rng(derive_seed(noise.rng_seed, t));
        values[t] = weighted_sum(run(circuit, noise.eps_2q, &noise_rng), table);
    });
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total / static_cast<double>(trajectories);
}

}  // namespace lrq
