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

#include "lrq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lrq/error.hpp"

namespace lrq {

bool Gate::is_two_qubit() const {
    return kind == GateKind::RZZ || kind == GateKind::CZ || kind == GateKind::CNOT ||
           kind == GateKind::SWAP;
}

bool Gate::is_single_qubit() const {
    return kind == GateKind::H || kind == GateKind::RX || kind == GateKind::RZ;
}

std::string_view basis_tag(Basis basis) {
    switch (basis) {
        case Basis::AbstractZZ:
            return "abstract_zz";
        case Basis::RoutedZZ:
            return "routed_zz";
        case Basis::FractionalZZ:
            return "fractional_zz";
        case Basis::CZ:
            return "cz";
        case Basis::CNOT:
            return "cnot";
        case Basis::ISwapLike:
            return "iswap";
    }
    return "?";
}

Basis parse_basis(std::string_view tag) {
    for (Basis b : {Basis::AbstractZZ, Basis::RoutedZZ, Basis::FractionalZZ, Basis::CZ, Basis::CNOT,
                    Basis::ISwapLike}) {
        if (basis_tag(b) == tag) {
            return b;
        }
    }
    if (tag == "cx") {
        return Basis::CNOT;
    }
    if (tag == "fractional") {
        return Basis::FractionalZZ;
    }
    if (tag == "abstract") {
        return Basis::AbstractZZ;
    }
    throw std::invalid_argument("unknown basis '" + std::string(tag) +
                                "' (expected abstract_zz, routed_zz, fractional_zz, cz, cnot, iswap)");
}

bool basis_allows(Basis basis, GateKind kind) {
    if (kind == GateKind::MeasureAll) {
        return basis != Basis::ISwapLike;
    }
    switch (basis) {
        case Basis::AbstractZZ:
            return kind == GateKind::H || kind == GateKind::RX || kind == GateKind::RZZ;
        case Basis::RoutedZZ:
            return kind == GateKind::H || kind == GateKind::RX || kind == GateKind::RZZ ||
                   kind == GateKind::SWAP;
        case Basis::FractionalZZ:
            return kind == GateKind::H || kind == GateKind::RX || kind == GateKind::RZ ||
                   kind == GateKind::RZZ || kind == GateKind::CZ;
        case Basis::CZ:
            return kind == GateKind::H || kind == GateKind::RX || kind == GateKind::RZ ||
                   kind == GateKind::CZ;
        case Basis::CNOT:
            return kind == GateKind::H || kind == GateKind::RX || kind == GateKind::RZ ||
                   kind == GateKind::CNOT;
        case Basis::ISwapLike:
            return false;
    }
    return false;
}

Circuit::Circuit(std::size_t n_qubits, Basis basis) : n_qubits_(n_qubits), basis_(basis) {
    if (basis == Basis::ISwapLike) {
        throw std::invalid_argument("the iswap basis is a count model only and cannot hold gates");
    }
    layout_.resize(n_qubits);
    std::iota(layout_.begin(), layout_.end(), Qubit{0});
}

void Circuit::append(const Gate &gate) {
    if (!basis_allows(basis_, gate.kind)) {
        throw std::invalid_argument("gate not allowed in basis " + std::string(basis_tag(basis_)));
    }
    if (gate.kind != GateKind::MeasureAll && gate.qubits[0] >= n_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(gate.qubits[0]) + " out of range");
    }
    if (gate.is_two_qubit()) {
        if (gate.qubits[1] >= n_qubits_) {
            throw std::out_of_range("qubit " + std::to_string(gate.qubits[1]) + " out of range");
        }
        if (gate.qubits[0] == gate.qubits[1]) {
            throw std::invalid_argument("two-qubit gate needs distinct operands");
        }
    }
    if (!std::isfinite(gate.theta)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    gates_.push_back(gate);
}

void Circuit::set_layout(std::vector<Qubit> layout) {
    if (layout.size() != n_qubits_) {
        throw std::invalid_argument("layout size does not match the qubit count");
    }
    std::vector<bool> seen(n_qubits_, false);
    for (Qubit q : layout) {
        if (q >= n_qubits_ || seen[q]) {
            throw std::invalid_argument("layout is not a permutation");
        }
        seen[q] = true;
    }
    layout_ = std::move(layout);
}

bool Circuit::has_identity_layout() const {
    for (std::size_t i = 0; i < layout_.size(); ++i) {
        if (layout_[i] != i) {
            return false;
        }
    }
    return true;
}

CountReport count_gates(const Circuit &circuit) {
    CountReport report;
    std::vector<std::uint64_t> level(circuit.n_qubits(), 0);
    for (const auto &g : circuit.gates()) {
        if (g.is_two_qubit()) {
            ++report.n_two_qubit;
            auto &a = level[g.qubits[0]];
            auto &b = level[g.qubits[1]];
            a = b = std::max(a, b) + 1;
            report.two_qubit_depth = std::max(report.two_qubit_depth, a);
        } else if (g.is_single_qubit()) {
            ++report.n_single_qubit;
        }
        if (g.kind == GateKind::RZZ || g.kind == GateKind::RZ) {
            ++report.n_zz_logical;
        }
    }
    return report;
}

std::vector<std::vector<std::size_t>> edge_coloring(const WeightedGraph &graph) {
    const auto &edges = graph.edges();
    const std::size_t n = graph.n_nodes();
    constexpr std::size_t kFree = ~std::size_t{0};
    std::vector<std::size_t> color(edges.size(), kFree);

    if (graph.two_coloring()) {
        // Alternating-path recoloring: with max-degree colors there is always
        // a color free at u; if it is taken at v, flipping the (a, b) path
        // from v frees it, and in a bipartite graph that path never reaches u.
        const std::size_t n_colors = std::max<std::size_t>(graph.max_degree(), 1);
        std::vector<std::vector<std::size_t>> at(n, std::vector<std::size_t>(n_colors, kFree));
        auto free_color = [&](NodeIndex x) {
            for (std::size_t c = 0; c < n_colors; ++c) {
                if (at[x][c] == kFree) {
                    return c;
                }
            }
            throw std::logic_error("edge coloring: no free color");
        };
        auto other = [&](std::size_t e, NodeIndex x) { return edges[e].u == x ? edges[e].v : edges[e].u; };
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const NodeIndex u = edges[e].u;
            const NodeIndex v = edges[e].v;
            const std::size_t a = free_color(u);
            if (at[v][a] != kFree) {
                const std::size_t b = free_color(v);
                std::vector<std::size_t> path;
                NodeIndex x = v;
                std::size_t c = a;
                while (at[x][c] != kFree) {
                    const std::size_t pe = at[x][c];
                    path.push_back(pe);
                    x = other(pe, x);
                    c = (c == a) ? b : a;
                }
                for (std::size_t pe : path) {
                    at[edges[pe].u][color[pe]] = kFree;
                    at[edges[pe].v][color[pe]] = kFree;
                }
                for (std::size_t pe : path) {
                    color[pe] = (color[pe] == a) ? b : a;
                    at[edges[pe].u][color[pe]] = pe;
                    at[edges[pe].v][color[pe]] = pe;
                }
            }
            color[e] = a;
            at[u][a] = e;
            at[v][a] = e;
        }
    } else {
        std::vector<std::vector<bool>> used(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto &cu = used[edges[e].u];
            auto &cv = used[edges[e].v];
            std::size_t c = 0;
            while ((c < cu.size() && cu[c]) || (c < cv.size() && cv[c])) {
                ++c;
            }
            cu.resize(std::max(cu.size(), c + 1), false);
            cv.resize(std::max(cv.size(), c + 1), false);
            cu[c] = cv[c] = true;
            color[e] = c;
        }
    }

    std::size_t n_colors = 0;
    for (std::size_t c : color) {
        n_colors = std::max(n_colors, c + 1);
    }
    std::vector<std::vector<std::size_t>> classes(n_colors);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        classes[color[e]].push_back(e);
    }
    return classes;
}

std::vector<Edge> cost_layer_order(const ProblemInstance &instance) {
    const auto &edges = instance.graph.edges();
    if (instance.topology.kind() == TopologyKind::FullyConnected) {
        return edges;
    }
    std::vector<Edge> order;
    order.reserve(edges.size());
    for (const auto &cls : edge_coloring(instance.graph)) {
        for (std::size_t e : cls) {
            order.push_back(edges[e]);
        }
    }
    return order;
}

Circuit build_lr_qaoa(const ProblemInstance &instance, const RampSchedule &schedule) {
    if (schedule.p == 0 || schedule.betas.size() != schedule.p || schedule.gammas.size() != schedule.p) {
        throw std::invalid_argument("invalid schedule");
    }
    const std::size_t n = instance.n_nodes();
    if (n == 0) {
        throw std::invalid_argument("instance has no nodes");
    }
    Circuit c(n, Basis::AbstractZZ);
    for (Qubit q = 0; q < n; ++q) {
        c.append(Gate::h(q));
    }
    const auto order = cost_layer_order(instance);
    for (std::size_t k = 0; k < schedule.p; ++k) {
        const double gamma = schedule.gammas[k];
        for (const auto &e : order) {
            c.append(Gate::rzz(2.0 * gamma * e.w, e.u, e.v));
        }
        const double beta = schedule.betas[k];
        for (Qubit q = 0; q < n; ++q) {
            c.append(Gate::rx(-2.0 * beta, q));
        }
    }
    c.append(Gate::measure_all());
    return c;
}

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

CountReport predicted_counts(const Topology &topology, Basis basis, std::size_t p_in, std::size_t n_in,
                             std::size_t n_edges_in) {
    const std::uint64_t p = p_in;
    const std::uint64_t n = n_in;
    std::uint64_t edges = n_edges_in;
    CountReport r;
    r.n_single_qubit = p * n + n;

    const bool fractional = basis == Basis::FractionalZZ || basis == Basis::AbstractZZ;
    const bool iswap = basis == Basis::ISwapLike;

    switch (topology.kind()) {
        case TopologyKind::Chain: {
            edges = n > 0 ? n - 1 : 0;
            r.n_zz_logical = p * edges;
            if (fractional) {
                r.n_two_qubit = p * edges;
                r.two_qubit_depth = 2 * p;
            } else if (iswap) {
                r.n_two_qubit = 4 * p * edges;
                r.two_qubit_depth = 8 * p;
            } else {
                r.n_two_qubit = 2 * p * edges;
                r.two_qubit_depth = 4 * p;
            }
            break;
        }
        case TopologyKind::HeavyHex:
        case TopologyKind::SquareGrid:
        case TopologyKind::Custom: {
            // Sublayers per cost layer: 3 for heavy-hex, 4 for square, the
            // edge-coloring size for anything else.
            std::uint64_t sublayers = 3;
            if (topology.kind() == TopologyKind::SquareGrid) {
                sublayers = 4;
            } else if (topology.kind() == TopologyKind::Custom) {
                std::vector<Edge> unit;
                for (auto [u, v] : topology.couplings()) {
                    unit.push_back({u, v, 1.0});
                }
                sublayers = edge_coloring(WeightedGraph(std::max<std::size_t>(n, 2), unit)).size();
            }
            r.n_zz_logical = p * edges;
            if (fractional) {
                r.n_two_qubit = p * edges;
                r.two_qubit_depth = sublayers * p;
            } else if (iswap) {
                r.n_two_qubit = 4 * p * edges;
                r.two_qubit_depth = 4 * sublayers * p;
            } else {
                r.n_two_qubit = 2 * p * edges;
                r.two_qubit_depth = 2 * sublayers * p;
            }
            break;
        }
        case TopologyKind::FullyConnected: {
            const std::uint64_t pairs = n * (n - 1) / 2;
            r.n_zz_logical = p * pairs;
            if (fractional) {
                r.n_two_qubit = p * pairs;
                r.two_qubit_depth = ceil_div(p * n * (n - 1), 8);
            } else if (iswap) {
                r.n_two_qubit = 6 * p * pairs;
                r.two_qubit_depth = 6 * p * n;
            } else {
                r.n_two_qubit = 3 * p * pairs;
                r.two_qubit_depth = 3 * p * n;
            }
            break;
        }
    }
    return r;
}

}  // namespace lrq
