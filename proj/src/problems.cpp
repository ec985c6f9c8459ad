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

#include "lrq/problems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "lrq/error.hpp"
#include "lrq/parallel.hpp"
#include "lrq/rng.hpp"

namespace lrq {

WeightedGraph::WeightedGraph(std::size_t n_nodes, std::vector<Edge> edges)
    : n_nodes_(n_nodes), edges_(std::move(edges)) {
    for (auto &e : edges_) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        }
        if (e.v >= n_nodes_) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") out of range for " + std::to_string(n_nodes_) + " nodes");
        }
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw std::invalid_argument("edge weights must be positive and finite");
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                        std::to_string(edges_[i].v) + ")");
        }
    }
}

double WeightedGraph::total_weight() const {
    double total = 0.0;
    for (const auto &e : edges_) {
        total += e.w;
    }
    return total;
}

std::size_t WeightedGraph::max_degree() const {
    std::vector<std::size_t> degree(n_nodes_, 0);
    for (const auto &e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

std::optional<std::vector<std::uint8_t>> WeightedGraph::two_coloring() const {
    std::vector<std::vector<NodeIndex>> adj(n_nodes_);
    for (const auto &e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    constexpr std::uint8_t kUnset = 2;
    std::vector<std::uint8_t> color(n_nodes_, kUnset);
    std::queue<NodeIndex> frontier;
    for (NodeIndex start = 0; start < n_nodes_; ++start) {
        if (color[start] != kUnset) {
            continue;
        }
        color[start] = 0;
        frontier.push(start);
        while (!frontier.empty()) {
            const NodeIndex a = frontier.front();
            frontier.pop();
            for (NodeIndex b : adj[a]) {
                if (color[b] == kUnset) {
                    color[b] = color[a] ^ 1;
                    frontier.push(b);
                } else if (color[b] == color[a]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("Bitstring entries must be 0 or 1");
        }
    }
}

Bitstring Bitstring::from_index(std::uint64_t index, std::size_t n) {
    if (n > 64) {
        throw std::invalid_argument("Bitstring::from_index supports at most 64 bits");
    }
    Bitstring out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.bits_[i] = static_cast<std::uint8_t>((index >> i) & 1U);
    }
    return out;
}

Bitstring Bitstring::parse(std::string_view text) {
    Bitstring out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            out.bits_[i] = 1;
        } else if (text[i] != '0') {
            throw ParseError("non-binary character '" + std::string(1, text[i]) + "' at position " +
                             std::to_string(i));
        }
    }
    return out;
}

std::string Bitstring::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            s[i] = '1';
        }
    }
    return s;
}

std::uint64_t Bitstring::to_index() const {
    if (bits_.size() > 64) {
        throw std::invalid_argument("Bitstring::to_index supports at most 64 bits");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        index |= static_cast<std::uint64_t>(bits_[i]) << i;
    }
    return index;
}

Bitstring Bitstring::complement() const {
    Bitstring out = *this;
    for (auto &b : out.bits_) {
        b ^= 1;
    }
    return out;
}

std::vector<double> default_weight_set() { return {0.1, 0.2, 0.3, 0.5, 1.0}; }

ProblemInstance generate_instance(const Topology &topology, std::size_t n,
                                  std::span<const double> weight_set, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("instances need at least 2 nodes");
    }
    if (weight_set.empty()) {
        throw std::invalid_argument("weight set must be non-empty");
    }
    for (double w : weight_set) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("weight set entries must be positive and finite");
        }
    }
    const auto couplings = topology.coupling_map(n);
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(couplings.size());
    for (const auto &[u, v] : couplings) {
        edges.push_back({u, v, weight_set[rng.below(weight_set.size())]});
    }
    ProblemInstance instance;
    instance.graph = WeightedGraph(n, std::move(edges));
    instance.topology = topology;
    instance.seed = seed;
    instance.weight_set.assign(weight_set.begin(), weight_set.end());
    return instance;
}

double cost(const WeightedGraph &graph, const Bitstring &x) {
    if (x.size() != graph.n_nodes()) {
        throw std::invalid_argument("bitstring length " + std::to_string(x.size()) +
                                    " does not match " + std::to_string(graph.n_nodes()) +
                                    " nodes");
    }
    double total = 0.0;
    for (const auto &e : graph.edges()) {
        if (x[e.u] != x[e.v]) {
            total += e.w;
        }
    }
    return total;
}

double cost(const ProblemInstance &instance, const Bitstring &x) { return cost(instance.graph, x); }

double cost_of_index(const WeightedGraph &graph, std::uint64_t index) {
    double total = 0.0;
    for (const auto &e : graph.edges()) {
        if (((index >> e.u) ^ (index >> e.v)) & 1U) {
            total += e.w;
        }
    }
    return total;
}

namespace {

struct ChunkBest {
    std::uint64_t index = 0;
    double value = -1.0;
};

// Gray-code walk over the low `free_bits` bits with the bits above fixed to
// `prefix`. The running cut is resynchronized periodically so accumulated
// rounding never outgrows a single step.
ChunkBest search_chunk(const WeightedGraph &graph,
                       const std::vector<std::vector<std::pair<NodeIndex, double>>> &adj,
                       std::uint64_t prefix, unsigned free_bits) {
    constexpr std::uint64_t kResyncPeriod = 1U << 14;
    std::uint64_t x = prefix;
    double current = cost_of_index(graph, x);
    ChunkBest best{x, current};
    const std::uint64_t steps = std::uint64_t{1} << free_bits;
    for (std::uint64_t t = 1; t < steps; ++t) {
        const unsigned node = static_cast<unsigned>(std::countr_zero(t));
        const std::uint64_t xi = (x >> node) & 1U;
        double delta = 0.0;
        for (const auto &[nb, w] : adj[node]) {
            delta += (((x >> nb) & 1U) == xi) ? w : -w;
        }
        x ^= std::uint64_t{1} << node;
        current += delta;
        if ((t & (kResyncPeriod - 1)) == 0) {
            current = cost_of_index(graph, x);
        }
        if (current > best.value) {
            best = {x, current};
        }
    }
    best.value = cost_of_index(graph, best.index);
    return best;
}

}  // namespace

Solution brute_force_optimum(const WeightedGraph &graph, std::size_t cap) {
    const std::size_t n = graph.n_nodes();
    if (n > cap || n > 63) {
        throw OptimumUnavailableError("optimum unavailable: " + std::to_string(n) +
                                      " nodes exceed the brute-force cap of " + std::to_string(cap) +
                                      "; supply known optimum");
    }
    if (n == 0) {
        return {Bitstring(0), 0.0};
    }
    std::vector<std::vector<std::pair<NodeIndex, double>>> adj(n);
    for (const auto &e : graph.edges()) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    // Node n-1 stays 0; the other n-1 bits are split into 2^chunk_bits
    // prefixes searched independently and reduced in prefix order.
    const unsigned search_bits = static_cast<unsigned>(n - 1);
    const unsigned chunk_bits = search_bits > 12 ? 6U : 0U;
    const unsigned free_bits = search_bits - chunk_bits;
    const std::size_t chunks = std::size_t{1} << chunk_bits;
    std::vector<ChunkBest> results(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        results[c] = search_chunk(graph, adj, static_cast<std::uint64_t>(c) << free_bits, free_bits);
    });
    ChunkBest best = results[0];
    for (std::size_t c = 1; c < chunks; ++c) {
        if (results[c].value > best.value) {
            best = results[c];
        }
    }
    return {Bitstring::from_index(best.index, n), best.value};
}

std::optional<Solution> bipartite_optimum(const WeightedGraph &graph) {
    auto coloring = graph.two_coloring();
    if (!coloring) {
        return std::nullopt;
    }
    Bitstring bits(std::move(*coloring));
    const double value = cost(graph, bits);
    return Solution{std::move(bits), value};
}

Solution exact_optimum(const ProblemInstance &instance, std::size_t cap) {
    if (auto s = bipartite_optimum(instance.graph)) {
        return *s;
    }
    if (instance.n_nodes() <= cap) {
        return brute_force_optimum(instance.graph, cap);
    }
    if (instance.optimum) {
        return *instance.optimum;
    }
    throw OptimumUnavailableError("optimum unavailable for non-bipartite graph with " +
                                  std::to_string(instance.n_nodes()) +
                                  " nodes (brute-force cap " + std::to_string(cap) +
                                  "); supply known optimum");
}

const Solution &require_optimum(const ProblemInstance &instance) {
    if (!instance.optimum) {
        throw OptimumUnavailableError("instance has no optimum; compute or supply one first");
    }
    return *instance.optimum;
}

ProblemInstance with_optimum(ProblemInstance instance, std::size_t cap) {
    instance.optimum = exact_optimum(instance, cap);
    return instance;
}

}  // namespace lrq
