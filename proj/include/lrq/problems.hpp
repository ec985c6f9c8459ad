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

#ifndef LRQ_PROBLEMS_HPP
#define LRQ_PROBLEMS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrq {

using NodeIndex = std::uint32_t;
using Coupling = std::pair<NodeIndex, NodeIndex>;

struct Edge {
    NodeIndex u = 0;
    NodeIndex v = 0;
    double w = 0.0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected graph with strictly positive edge weights.
///
/// Edges are kept in canonical order: u < v, sorted by (u, v), no duplicates.
/// The constructor accepts edges in any order and orientation.
class WeightedGraph {
   public:
    WeightedGraph() = default;
    WeightedGraph(std::size_t n_nodes, std::vector<Edge> edges);

    std::size_t n_nodes() const { return n_nodes_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }

    /// Sum of all edge weights, accumulated in canonical edge order.
    double total_weight() const;
    std::size_t max_degree() const;

    /// Proper 2-coloring when the graph is bipartite. Node 0 of every
    /// connected component gets color 0.
    std::optional<std::vector<std::uint8_t>> two_coloring() const;

    friend bool operator==(const WeightedGraph &, const WeightedGraph &) = default;

   private:
    std::size_t n_nodes_ = 0;
    std::vector<Edge> edges_;
};

/// Partition labels, one per node. Text form writes node 0 first.
class Bitstring {
   public:
    Bitstring() = default;
    explicit Bitstring(std::size_t n) : bits_(n, 0) {}
    explicit Bitstring(std::vector<std::uint8_t> bits);

    /// Bit i of `index` becomes node i. Requires n <= 64.
    static Bitstring from_index(std::uint64_t index, std::size_t n);
    /// Character i is node i; only '0' and '1' are accepted.
    static Bitstring parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
    const std::vector<std::uint8_t> &bits() const { return bits_; }

    std::string to_string() const;
    std::uint64_t to_index() const;
    Bitstring complement() const;

    auto operator<=>(const Bitstring &) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

enum class TopologyKind { Chain, HeavyHex, SquareGrid, FullyConnected, Custom };

/// Interaction graph family of a benchmark instance.
///
/// Text tags: "chain", "fc", "heavyhex:<template>", "grid:<rows>x<cols>",
/// "grid:<template>", "custom". Built-in heavy-hex templates are eagle127,
/// heron133 and heron156; the square template is garnet20.
class Topology {
   public:
    Topology() = default;

    static Topology chain();
    static Topology fully_connected();
    static Topology heavy_hex(std::string template_id);
    static Topology square_grid(std::uint32_t rows, std::uint32_t cols);
    static Topology square_template(std::string template_id);
    static Topology custom(std::vector<Coupling> couplings);
    static Topology parse(std::string_view tag);

    TopologyKind kind() const { return kind_; }
    const std::string &template_id() const { return template_id_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    const std::vector<Coupling> &couplings() const { return couplings_; }

    std::string tag() const;
    /// Device-native sparse layouts (heavy-hex, square, custom).
    bool is_native_layout() const;

    /// Node counts this topology accepts; empty means any n >= 2.
    std::vector<std::size_t> valid_sizes() const;

    /// Coupling list for n nodes in canonical order.
    /// Throws SizeMismatchError when n is not a valid size.
    std::vector<Coupling> coupling_map(std::size_t n) const;

    friend bool operator==(const Topology &, const Topology &) = default;

   private:
    TopologyKind kind_ = TopologyKind::Chain;
    std::string template_id_;
    std::uint32_t rows_ = 0;
    std::uint32_t cols_ = 0;
    std::vector<Coupling> couplings_;
};

/// Names of the built-in heavy-hex device templates.
std::vector<std::string> heavy_hex_templates();

struct Solution {
    Bitstring bits;
    double value = 0.0;
};

struct ProblemInstance {
    WeightedGraph graph;
    Topology topology;
    std::uint64_t seed = 0;
    std::vector<double> weight_set;
    std::optional<Solution> optimum;

    std::size_t n_nodes() const { return graph.n_nodes(); }
};

/// {0.1, 0.2, 0.3, 0.5, 1.0}
std::vector<double> default_weight_set();

/// Seeded weighted MaxCut instance on a topology. Weights are drawn from
/// `weight_set` in canonical edge order, one Rng::below draw per edge.
ProblemInstance generate_instance(const Topology &topology, std::size_t n,
                                  std::span<const double> weight_set, std::uint64_t seed);

/// Total weight of cut edges.
double cost(const WeightedGraph &graph, const Bitstring &x);
double cost(const ProblemInstance &instance, const Bitstring &x);
/// Cut weight of the assignment encoded in `index` (bit i = node i).
double cost_of_index(const WeightedGraph &graph, std::uint64_t index);

inline constexpr std::size_t kDefaultBruteForceCap = 26;

/// Exhaustive search over 2^(n-1) assignments (node n-1 pinned to 0 by
/// complement symmetry). Throws OptimumUnavailableError above `cap`.
Solution brute_force_optimum(const WeightedGraph &graph,
                             std::size_t cap = kDefaultBruteForceCap);

/// Optimum of a bipartite graph: its 2-coloring cuts every edge.
std::optional<Solution> bipartite_optimum(const WeightedGraph &graph);

/// Bipartite fast path, then brute force up to `cap`, then the optimum
/// stored on the instance. Throws OptimumUnavailableError otherwise.
Solution exact_optimum(const ProblemInstance &instance,
                       std::size_t cap = kDefaultBruteForceCap);

/// Returns the stored optimum or throws OptimumUnavailableError.
const Solution &require_optimum(const ProblemInstance &instance);

/// Copy of `instance` with `optimum` filled by exact_optimum.
ProblemInstance with_optimum(ProblemInstance instance,
                             std::size_t cap = kDefaultBruteForceCap);

// Instance files (JSON). Bit strings follow the Bitstring text convention.
std::string instance_to_json(const ProblemInstance &instance);
ProblemInstance instance_from_json(std::string_view text);
void save_instance(const ProblemInstance &instance, const std::filesystem::path &path);
ProblemInstance load_instance(const std::filesystem::path &path);

}  // namespace lrq

#endif
