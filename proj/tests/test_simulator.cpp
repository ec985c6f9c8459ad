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


#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>

#include "gtest/gtest.h"
#include "lrq/error.hpp"
#include "lrq/simulator.hpp"

using namespace lrq;

namespace {

using cd = std::complex<double>;

void expect_amp(const StateVector &s, std::size_t idx, cd want) {
    EXPECT_NEAR(s.amplitudes()[idx].real(), want.real(), 1e-12) << "index " << idx;
    EXPECT_NEAR(s.amplitudes()[idx].imag(), want.imag(), 1e-12) << "index " << idx;
}

ProblemInstance chain_instance(std::size_t n, std::uint64_t seed) {
    auto ws = default_weight_set();
    return with_optimum(generate_instance(Topology::chain(), n, ws, seed));
}

}  // namespace

TEST(state_vector, single_qubit_gates) {
    const double h = 1.0 / std::sqrt(2.0);
    StateVector s(2);
    s.apply(Gate::h(1));
    expect_amp(s, 0, h);
    expect_amp(s, 2, h);
    StateVector r(1);
    r.apply(Gate::rx(std::numbers::pi, 0));
    expect_amp(r, 1, cd(0.0, -1.0));
    StateVector z(1);
    z.apply(Gate::h(0));
    z.apply(Gate::rz(std::numbers::pi / 2, 0));
    expect_amp(z, 0, h * std::exp(cd(0.0, -std::numbers::pi / 4)));
    expect_amp(z, 1, h * std::exp(cd(0.0, std::numbers::pi / 4)));
}

TEST(state_vector, two_qubit_gates) {
    // |q1 q0> = |01> is index 1.
    StateVector s(2);
    s.apply(Gate::rx(std::numbers::pi, 0));
    s.apply(Gate::cnot(0, 1));
    expect_amp(s, 3, cd(0.0, -1.0));
    s.apply(Gate::cz(0, 1));
    expect_amp(s, 3, cd(0.0, 1.0));
    s.apply(Gate::cnot(1, 0));
    expect_amp(s, 2, cd(0.0, 1.0));
    s.apply(Gate::swap(0, 1));
    expect_amp(s, 1, cd(0.0, 1.0));

    StateVector zz(2);
    zz.apply(Gate::h(0));
    zz.apply(Gate::h(1));
    zz.apply(Gate::rzz(0.6, 0, 1));
    expect_amp(zz, 0, 0.5 * std::exp(cd(0.0, -0.3)));
    expect_amp(zz, 1, 0.5 * std::exp(cd(0.0, 0.3)));
    expect_amp(zz, 3, 0.5 * std::exp(cd(0.0, -0.3)));
}

TEST(state_vector, paulis) {
    StateVector s(1);
    s.apply_pauli(1, 0);
    expect_amp(s, 1, 1.0);
    s.apply_pauli(2, 0);
    expect_amp(s, 0, cd(0.0, -1.0));
    s.apply_pauli(3, 0);
    expect_amp(s, 0, cd(0.0, -1.0));
}

TEST(to_logical_order, permutes_bits) {
    StateVector s(3);
    s.apply(Gate::rx(std::numbers::pi, 2));  // physical index 4
    std::vector<Qubit> layout{2, 0, 1};       // logical 0 lives on physical 2
    auto l = to_logical_order(s, layout);
    expect_amp(l, 1, cd(0.0, -1.0));
}

TEST(simulate, cap_is_enforced) {
    ::setenv("LRQ_SIM_CAP", "4", 1);
    EXPECT_EQ(simulation_cap(), 4U);
    Circuit c(5, Basis::AbstractZZ);
    EXPECT_THROW(simulate(c), ResourceError);
    ::unsetenv("LRQ_SIM_CAP");
    EXPECT_EQ(simulation_cap(), 24U);
}

TEST(sample, matches_distribution) {
    Circuit c(2, Basis::AbstractZZ);
    c.append(Gate::rx(2.0 * std::acos(std::sqrt(0.8)), 0));
    c.append(Gate::h(1));
    const std::uint64_t shots = 40000;
    auto samples = sample(c, shots, {}, 5);
    EXPECT_EQ(samples.shots, shots);
    const double expected[4] = {0.4, 0.1, 0.4, 0.1};  // index = q0 + 2 q1
    double chi2 = 0.0;
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        auto it = samples.counts.find(Bitstring::from_index(idx, 2));
        const double got = it == samples.counts.end() ? 0.0 : static_cast<double>(it->second);
        const double e = expected[idx] * shots;
        chi2 += (got - e) * (got - e) / e;
    }
    EXPECT_LT(chi2, 16.27);  // 3 dof, 0.999 quantile
}

TEST(sample, deterministic) {
    auto inst = chain_instance(6, 1);
    auto c = build_lr_qaoa(inst, build_schedule(3, 1.0));
    NoiseModel noise{0.05, 9};
    EXPECT_EQ(sample(c, 500, noise, 3, {50}), sample(c, 500, noise, 3, {50}));
    EXPECT_NE(sample(c, 500, noise, 3, {50}), sample(c, 500, noise, 4, {50}));
    EXPECT_THROW(sample(c, 0, noise, 3), std::invalid_argument);
    EXPECT_THROW(sample(c, 10, NoiseModel{1.5, 0}, 3), std::invalid_argument);
}

TEST(sample, routed_samples_are_in_logical_order) {
    auto ws = default_weight_set();
    auto inst = with_optimum(generate_instance(Topology::fully_connected(), 5, ws, 4));
    auto s = build_schedule(2, 0.6);
    auto direct = build_lr_qaoa(inst, s);
    auto routed = decompose_to_basis(transpile_swap_network(inst, s), Basis::CZ);
    const double a = noisy_expected_cost(direct, inst, {}, 1);
    const double b = noisy_expected_cost(routed, inst, {}, 1);
    EXPECT_NEAR(a, b, 1e-10);
    EXPECT_NEAR(a, expected_cost(simulate(direct), inst), 1e-12);
}

TEST(noise, full_depolarizing_mixes_state) {
    // With eps = 1 every ZZ is followed by a random Pauli pair; the expected
    // cut tends to the uniform value half the total weight.
    auto inst = chain_instance(6, 2);
    auto c = build_lr_qaoa(inst, build_schedule(20, 1.0));
    const double noiseless = noisy_expected_cost(c, inst, {}, 1);
    const double mixed = noisy_expected_cost(c, inst, NoiseModel{1.0, 3}, 400);
    const double half = inst.graph.total_weight() / 2.0;
    EXPECT_GT(noiseless, half + 0.1 * half);
    EXPECT_NEAR(mixed, half, 0.05 * half);
}

TEST(noise, small_eps_is_close_to_noiseless) {
    auto inst = chain_instance(6, 3);
    auto c = build_lr_qaoa(inst, build_schedule(5, 1.0));
    const double a = noisy_expected_cost(c, inst, {}, 1);
    const double b = noisy_expected_cost(c, inst, NoiseModel{1e-4, 1}, 50);
    EXPECT_NEAR(a, b, 0.01 * a);
}

TEST(sample_io, round_trip) {
    SampleSet s;
    s.n_qubits = 3;
    s.add(Bitstring::parse("101"), 7);
    s.add(Bitstring::parse("000"), 2);
    auto text = samples_to_text(s);
    EXPECT_EQ(samples_from_text(text, 3), s);
}

TEST(sample_io, headerless_and_bare_lines) {
    auto s = samples_from_text("101\n101 3\n\n011 1\n");
    EXPECT_EQ(s.shots, 5U);
    EXPECT_EQ(s.counts.at(Bitstring::parse("101")), 4U);
}

TEST(sample_io, reports_line_numbers) {
    try {
        samples_from_text("101 1\n10 2\n", 3);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(samples_from_text("1x1 1\n"), ParseError);
    EXPECT_THROW(samples_from_text(""), ParseError);
    EXPECT_THROW(samples_from_text("101 99999999999999999999999\n"), ParseError);
    EXPECT_THROW(samples_from_text("101 1\n", 4), ParseError);
}
