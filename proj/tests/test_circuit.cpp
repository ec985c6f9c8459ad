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
#include <map>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "lrq/circuit.hpp"
#include "lrq/error.hpp"
#include "lrq/rng.hpp"
#include "lrq/simulator.hpp"

using namespace lrq;

namespace {

using cd = std::complex<double>;

// QAOA state from the diagonal cost phases exp(-i gamma w ZZ) and the
// mixer exp(+i beta X) applied qubit by qubit.
std::vector<cd> reference_state(const ProblemInstance &inst, const RampSchedule &s) {
    const std::size_t n = inst.n_nodes();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cd> psi(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    for (std::size_t k = 0; k < s.p; ++k) {
        for (std::size_t x = 0; x < dim; ++x) {
            double phase = 0.0;
            for (const auto &e : inst.graph.edges()) {
                const double zz = (((x >> e.u) ^ (x >> e.v)) & 1) ? -1.0 : 1.0;
                phase += s.gammas[k] * e.w * zz;
            }
            psi[x] *= std::exp(cd(0.0, -phase));
        }
        const double c = std::cos(s.betas[k]);
        const double sn = std::sin(s.betas[k]);
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t x = 0; x < dim; ++x) {
                if (x & bit) {
                    continue;
                }
                const cd a = psi[x];
                const cd b = psi[x | bit];
                psi[x] = c * a + cd(0.0, sn) * b;
                psi[x | bit] = cd(0.0, sn) * a + c * b;
            }
        }
    }
    return psi;
}

// Max |a - e^{i phi} b| with phi fixed by the largest component.
double phase_distance(std::span<const cd> a, std::span<const cd> b) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i]) > std::abs(a[k])) {
            k = i;
        }
    }
    const cd phase = b[k] == cd(0.0) ? cd(1.0) : a[k] / b[k] * std::abs(b[k]) / std::abs(a[k]);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

ProblemInstance make(const char *tag, std::size_t n, std::uint64_t seed) {
    auto ws = default_weight_set();
    return generate_instance(Topology::parse(tag), n, ws, seed);
}

}  // namespace

TEST(basis, tags_round_trip) {
    for (auto b : {Basis::AbstractZZ, Basis::RoutedZZ, Basis::FractionalZZ, Basis::CZ, Basis::CNOT,
                   Basis::ISwapLike}) {
        EXPECT_EQ(parse_basis(basis_tag(b)), b);
    }
    EXPECT_THROW(parse_basis("u3"), std::invalid_argument);
}

TEST(circuit_append, validates) {
    Circuit c(3, Basis::CZ);
    EXPECT_THROW(c.append(Gate::rzz(0.1, 0, 1)), std::invalid_argument);
    EXPECT_THROW(c.append(Gate::cz(0, 3)), std::out_of_range);
    EXPECT_THROW(c.append(Gate::cz(1, 1)), std::invalid_argument);
    c.append(Gate::cz(0, 2));
    EXPECT_EQ(c.gates().size(), 1U);
}

TEST(build_lr_qaoa, matches_reference_state) {
    for (auto tag : {"chain", "fc", "grid:2x3"}) {
        auto inst = make(tag, 6, 4);
        auto s = build_schedule(3, 0.7, 0.9);
        auto c = build_lr_qaoa(inst, s);
        auto ref = reference_state(inst, s);
        auto sv = simulate(c);
        EXPECT_LT(phase_distance(sv.amplitudes(), ref), 1e-12) << tag;
    }
}

TEST(build_lr_qaoa, two_node_chain_gate_list) {
    std::vector<double> ws{1.0};
    auto inst = generate_instance(Topology::chain(), 2, ws, 0);
    auto c = build_lr_qaoa(inst, build_schedule(1, 1.0));
    const std::vector<Gate> want = {Gate::h(0),        Gate::h(1),        Gate::rzz(2.0, 0, 1),
                                    Gate::rx(-2.0, 0), Gate::rx(-2.0, 1), Gate::measure_all()};
    EXPECT_EQ(c.gates(), want);
}

TEST(build_lr_qaoa, gate_structure) {
    auto inst = make("chain", 5, 1);
    auto c = build_lr_qaoa(inst, build_schedule(2, 1.0));
    auto counts = count_gates(c);
    EXPECT_EQ(counts.n_two_qubit, 8U);
    EXPECT_EQ(counts.n_zz_logical, 8U);
    EXPECT_EQ(counts.n_single_qubit, 2U * 5 + 5);
    EXPECT_EQ(counts.two_qubit_depth, 4U);
    EXPECT_EQ(c.gates().back().kind, GateKind::MeasureAll);
}

TEST(edge_coloring, is_proper_and_tight_for_bipartite) {
    for (auto [tag, n] : std::vector<std::pair<const char *, std::size_t>>{
             {"heavyhex:eagle127", 127}, {"grid:garnet20", 20}, {"grid:4x5", 20}, {"fc", 7}}) {
        auto inst = make(tag, n, 0);
        auto colors = edge_coloring(inst.graph);
        std::size_t covered = 0;
        for (const auto &cls : colors) {
            std::set<NodeIndex> used;
            for (auto idx : cls) {
                const auto &e = inst.graph.edges()[idx];
                EXPECT_TRUE(used.insert(e.u).second);
                EXPECT_TRUE(used.insert(e.v).second);
            }
            covered += cls.size();
        }
        EXPECT_EQ(covered, inst.graph.n_edges());
        if (inst.graph.two_coloring()) {
            EXPECT_EQ(colors.size(), inst.graph.max_degree()) << tag;
        }
    }
}

TEST(transpile_swap_network, pair_trace_covers_each_edge_once_per_layer) {
    Rng rng(17);
    for (std::size_t n = 2; n <= 12; ++n) {
        auto inst = make("fc", n, n);
        const std::size_t p = 2;
        std::vector<Qubit> order(n);
        std::iota(order.begin(), order.end(), Qubit{0});
        for (std::size_t i = n; i > 1; --i) {
            std::swap(order[i - 1], order[rng.below(i)]);
        }
        auto c = transpile_swap_network(inst, build_schedule(p, 0.5), order);
        // occupant[physical] = logical qubit held there.
        std::vector<Qubit> occupant(n);
        for (std::size_t pos = 0; pos < n; ++pos) {
            occupant[order[pos]] = static_cast<Qubit>(pos);
        }
        std::vector<std::map<std::pair<Qubit, Qubit>, int>> seen(p);
        std::size_t layer = 0;
        std::size_t rx_in_layer = 0;
        for (const auto &g : c.gates()) {
            if (g.kind == GateKind::RZZ) {
                auto a = occupant[g.qubits[0]];
                auto b = occupant[g.qubits[1]];
                seen[layer][{std::min(a, b), std::max(a, b)}]++;
            } else if (g.kind == GateKind::SWAP) {
                std::swap(occupant[g.qubits[0]], occupant[g.qubits[1]]);
            } else if (g.kind == GateKind::RX && ++rx_in_layer == n) {
                rx_in_layer = 0;
                ++layer;
            }
        }
        ASSERT_EQ(layer, p);
        for (std::size_t k = 0; k < p; ++k) {
            ASSERT_EQ(seen[k].size(), inst.graph.n_edges()) << "n=" << n;
            for (const auto &e : inst.graph.edges()) {
                EXPECT_EQ((seen[k][{e.u, e.v}]), 1);
            }
        }
        for (Qubit l = 0; l < n; ++l) {
            EXPECT_EQ(occupant[c.layout()[l]], l);
        }
    }
}

TEST(transpile_swap_network, routed_state_matches_direct) {
    for (std::size_t n = 3; n <= 6; ++n) {
        auto inst = make("fc", n, 100 + n);
        auto s = build_schedule(2, 0.45);
        auto direct = simulate(build_lr_qaoa(inst, s));
        for (auto basis : {Basis::RoutedZZ, Basis::CZ, Basis::CNOT, Basis::FractionalZZ}) {
            auto routed = decompose_to_basis(transpile_swap_network(inst, s), basis);
            auto logical = to_logical_order(simulate(routed), routed.layout());
            EXPECT_LT(phase_distance(logical.amplitudes(), direct.amplitudes()), 1e-9)
                << "n=" << n << " basis=" << basis_tag(basis);
        }
    }
}

TEST(transpile_swap_network, rejects_sparse_instances) {
    auto inst = make("chain", 4, 0);
    EXPECT_THROW(transpile_swap_network(inst, build_schedule(1, 1.0)), std::invalid_argument);
}

TEST(decompose_to_basis, direct_circuit_equivalence) {
    auto inst = make("grid:2x3", 6, 9);
    auto s = build_schedule(2, 0.8);
    auto abstract = build_lr_qaoa(inst, s);
    auto ref = simulate(abstract);
    for (auto basis : {Basis::CZ, Basis::CNOT, Basis::FractionalZZ}) {
        auto c = decompose_to_basis(abstract, basis);
        EXPECT_LT(phase_distance(simulate(c).amplitudes(), ref.amplitudes()), 1e-12);
        for (const auto &g : c.gates()) {
            EXPECT_TRUE(basis_allows(basis, g.kind));
        }
    }
    EXPECT_THROW(decompose_to_basis(abstract, Basis::ISwapLike), std::invalid_argument);
}

TEST(predicted_counts, matches_constructed_circuits) {
    struct Case {
        const char *tag;
        std::size_t n;
        Basis basis;
    };
    const std::vector<Case> cases = {
        {"chain", 12, Basis::CZ},          {"chain", 12, Basis::FractionalZZ},
        {"chain", 12, Basis::AbstractZZ},  {"chain", 3, Basis::CNOT},
        {"fc", 7, Basis::CZ},              {"fc", 8, Basis::CNOT},
        {"fc", 6, Basis::AbstractZZ},      {"fc", 6, Basis::FractionalZZ},
        {"heavyhex:eagle127", 127, Basis::CZ}, {"heavyhex:heron156", 156, Basis::FractionalZZ},
        {"grid:garnet20", 20, Basis::CZ},  {"grid:4x4", 16, Basis::CNOT},
    };
    for (const auto &cs : cases) {
        auto inst = make(cs.tag, cs.n, 3);
        for (std::size_t p : {1, 2, 5}) {
            auto s = build_schedule(p, 0.5);
            const bool routed = inst.topology.kind() == TopologyKind::FullyConnected &&
                                (cs.basis == Basis::CZ || cs.basis == Basis::CNOT);
            auto c = routed ? decompose_to_basis(transpile_swap_network(inst, s), cs.basis)
                            : decompose_to_basis(build_lr_qaoa(inst, s), cs.basis);
            auto got = count_gates(c);
            auto want = predicted_counts(inst.topology, cs.basis, p, cs.n, inst.graph.n_edges());
            EXPECT_EQ(got.n_two_qubit, want.n_two_qubit) << cs.tag << " p=" << p << " " << basis_tag(cs.basis);
            EXPECT_EQ(got.n_zz_logical, want.n_zz_logical) << cs.tag << " p=" << p;
            if (!(inst.topology.kind() == TopologyKind::FullyConnected && !routed)) {
                EXPECT_EQ(got.two_qubit_depth, want.two_qubit_depth)
                    << cs.tag << " p=" << p << " " << basis_tag(cs.basis);
            }
        }
    }
}

TEST(predicted_counts, iswap_doubles_cz) {
    auto chain = predicted_counts(Topology::chain(), Basis::ISwapLike, 4, 10, 9);
    EXPECT_EQ(chain.n_two_qubit, 4U * 4 * 9);
    EXPECT_EQ(chain.two_qubit_depth, 32U);
    auto fc = predicted_counts(Topology::fully_connected(), Basis::ISwapLike, 2, 5, 10);
    EXPECT_EQ(fc.n_two_qubit, 6U * 2 * 10);
}

TEST(circuit_io, neutral_round_trip) {
    auto inst = make("fc", 5, 2);
    // An odd layer count leaves the logical order reversed.
    auto c = decompose_to_basis(transpile_swap_network(inst, build_schedule(3, 0.3)), Basis::CZ);
    auto text = export_circuit(c);
    auto back = import_circuit(text);
    EXPECT_EQ(back, c);
    EXPECT_FALSE(back.has_identity_layout());
    auto routed = transpile_swap_network(inst, build_schedule(1, 0.3));
    EXPECT_EQ(import_circuit(export_circuit(routed)), routed);
}

TEST(circuit_io, qasm_round_trip) {
    auto inst = make("fc", 4, 2);
    auto c = decompose_to_basis(transpile_swap_network(inst, build_schedule(2, 0.3)), Basis::CNOT);
    auto text = export_circuit(c, CircuitFormat::Qasm2);
    EXPECT_NE(text.find("OPENQASM 2.0;"), std::string::npos);
    auto back = import_circuit(text);
    EXPECT_EQ(back.basis(), c.basis());
    EXPECT_EQ(back.layout(), c.layout());
    ASSERT_EQ(back.gates().size(), c.gates().size());
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        EXPECT_EQ(back.gates()[i].kind, c.gates()[i].kind);
        EXPECT_EQ(back.gates()[i].qubits, c.gates()[i].qubits);
        EXPECT_DOUBLE_EQ(back.gates()[i].theta, c.gates()[i].theta);
    }
    EXPECT_THROW(export_circuit(build_lr_qaoa(inst, build_schedule(1, 0.3)), CircuitFormat::Qasm2),
                 std::invalid_argument);
}

TEST(circuit_io, rejects_garbage) {
    EXPECT_THROW(import_circuit("hello"), ParseError);
    EXPECT_THROW(import_circuit("lrq-circuit v1 nq=2 basis=cz\nCZ 0 5\n"), ParseError);
}
