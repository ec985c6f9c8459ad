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
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "json.hpp"
#include "lrq/error.hpp"
#include "lrq/problems.hpp"
#include "lrq/rng.hpp"

using namespace lrq;

namespace {

// Independent exhaustive maximum over all 2^n assignments.
double enumerate_max(const WeightedGraph &g) {
    double best = 0.0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.n_nodes()); ++x) {
        double c = 0.0;
        for (const auto &e : g.edges()) {
            if (((x >> e.u) & 1) != ((x >> e.v) & 1)) {
                c += e.w;
            }
        }
        best = std::max(best, c);
    }
    return best;
}

bool is_bipartite_edges(std::size_t n, const std::vector<Coupling> &cs) {
    WeightedGraph g(n, [&] {
        std::vector<Edge> es;
        for (auto [u, v] : cs) {
            es.push_back({u, v, 1.0});
        }
        return es;
    }());
    return g.two_coloring().has_value();
}

}  // namespace

TEST(weighted_graph, canonicalizes) {
    WeightedGraph g(4, {{3, 1, 0.5}, {0, 2, 1.0}, {1, 0, 0.2}});
    ASSERT_EQ(g.n_edges(), 3U);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1, 0.2}));
    EXPECT_EQ(g.edges()[1], (Edge{0, 2, 1.0}));
    EXPECT_EQ(g.edges()[2], (Edge{1, 3, 0.5}));
    EXPECT_DOUBLE_EQ(g.total_weight(), 1.7);
    EXPECT_EQ(g.max_degree(), 2U);
}

TEST(weighted_graph, rejects_bad_edges) {
    EXPECT_THROW(WeightedGraph(3, {{0, 0, 1.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(3, {{0, 3, 1.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(3, {{0, 1, 0.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
}

TEST(bitstring, text_and_index) {
    auto b = Bitstring::parse("1101");
    EXPECT_TRUE(b[0]);
    EXPECT_FALSE(b[2]);
    EXPECT_EQ(b.to_index(), 0b1011U);
    EXPECT_EQ(Bitstring::from_index(0b1011, 4), b);
    EXPECT_EQ(b.to_string(), "1101");
    EXPECT_EQ(b.complement().to_string(), "0010");
    EXPECT_THROW(Bitstring::parse("10a"), ParseError);
}

TEST(cost, simple_triangle) {
    WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 0.5}, {0, 2, 0.2}});
    EXPECT_DOUBLE_EQ(cost(g, Bitstring::parse("100")), 1.2);
    EXPECT_DOUBLE_EQ(cost(g, Bitstring::parse("010")), 1.5);
    EXPECT_DOUBLE_EQ(cost(g, Bitstring::parse("000")), 0.0);
    EXPECT_DOUBLE_EQ(cost_of_index(g, 0b010), 1.5);
}

TEST(topology, heavy_hex_templates) {
    const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
        {"eagle127", {127, 144}}, {"heron133", {133, 150}}, {"heron156", {156, 176}}};
    for (const auto &[id, ne] : expected) {
        auto t = Topology::heavy_hex(id);
        ASSERT_EQ(t.valid_sizes(), std::vector<std::size_t>{ne.first}) << id;
        auto cs = t.coupling_map(ne.first);
        EXPECT_EQ(cs.size(), ne.second) << id;
        EXPECT_TRUE(is_bipartite_edges(ne.first, cs)) << id;
        std::size_t max_deg = 0;
        std::vector<std::size_t> deg(ne.first, 0);
        for (auto [u, v] : cs) {
            max_deg = std::max({max_deg, ++deg[u], ++deg[v]});
        }
        EXPECT_LE(max_deg, 3U) << id;
    }
}

TEST(topology, square_grids) {
    auto garnet = Topology::square_template("garnet20");
    auto cs = garnet.coupling_map(20);
    EXPECT_EQ(cs.size(), 30U);
    EXPECT_TRUE(is_bipartite_edges(20, cs));
    auto grid = Topology::square_grid(3, 4);
    EXPECT_EQ(grid.coupling_map(12).size(), 3U * 3 + 2 * 4);
    EXPECT_TRUE(is_bipartite_edges(12, grid.coupling_map(12)));
}

TEST(topology, size_mismatch_lists_valid_sizes) {
    try {
        Topology::heavy_hex("eagle127").coupling_map(100);
        FAIL();
    } catch (const SizeMismatchError &e) {
        EXPECT_NE(std::string(e.what()).find("127"), std::string::npos);
    }
    EXPECT_THROW(Topology::square_grid(2, 3).coupling_map(5), SizeMismatchError);
}

TEST(topology, tags_round_trip) {
    for (auto tag : {"chain", "fc", "heavyhex:eagle127", "heavyhex:heron156", "grid:3x4", "grid:garnet20"}) {
        EXPECT_EQ(Topology::parse(tag).tag(), tag);
    }
    EXPECT_THROW(Topology::parse("torus"), ParseError);
}

TEST(generate_instance, chain_two_nodes) {
    std::vector<double> ws{1.0};
    auto inst = generate_instance(Topology::chain(), 2, ws, 0);
    ASSERT_EQ(inst.graph.n_edges(), 1U);
    EXPECT_EQ(inst.graph.edges()[0], (Edge{0, 1, 1.0}));
}

TEST(generate_instance, eagle_has_144_edges) {
    auto ws = default_weight_set();
    auto inst = generate_instance(Topology::heavy_hex("eagle127"), 127, ws, 99);
    EXPECT_EQ(inst.graph.n_edges(), 144U);
}

TEST(generate_instance, fc_weight_histogram) {
    auto ws = default_weight_set();
    auto inst = generate_instance(Topology::fully_connected(), 20, ws, 7);
    ASSERT_EQ(inst.graph.n_edges(), 190U);
    std::map<double, int> hist;
    for (const auto &e : inst.graph.edges()) {
        hist[e.w]++;
    }
    double chi2 = 0.0;
    const double expect = 190.0 / 5.0;
    for (double w : ws) {
        chi2 += (hist[w] - expect) * (hist[w] - expect) / expect;
    }
    // 4 degrees of freedom; 18.47 is the 0.999 quantile.
    EXPECT_LT(chi2, 18.47);
}

TEST(generate_instance, deterministic_and_validated) {
    auto ws = default_weight_set();
    auto a = generate_instance(Topology::chain(), 30, ws, 5);
    auto b = generate_instance(Topology::chain(), 30, ws, 5);
    auto c = generate_instance(Topology::chain(), 30, ws, 6);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_NE(a.graph, c.graph);
    EXPECT_THROW(generate_instance(Topology::chain(), 1, ws, 0), std::invalid_argument);
    std::vector<double> empty;
    EXPECT_THROW(generate_instance(Topology::chain(), 4, empty, 0), std::invalid_argument);
    std::vector<double> negative{-1.0};
    EXPECT_THROW(generate_instance(Topology::chain(), 4, negative, 0), std::invalid_argument);
}

TEST(optimum, brute_force_matches_enumeration) {
    auto ws = default_weight_set();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (std::size_t n : {2, 5, 9, 12}) {
            auto inst = generate_instance(Topology::fully_connected(), n, ws, seed);
            auto sol = brute_force_optimum(inst.graph);
            EXPECT_NEAR(sol.value, enumerate_max(inst.graph), 1e-12);
            EXPECT_NEAR(cost(inst.graph, sol.bits), sol.value, 1e-12);
            EXPECT_FALSE(sol.bits[n - 1]);
        }
    }
}

TEST(optimum, bipartite_is_total_weight) {
    auto ws = default_weight_set();
    auto inst = generate_instance(Topology::square_grid(4, 4), 16, ws, 3);
    auto bip = bipartite_optimum(inst.graph);
    ASSERT_TRUE(bip);
    EXPECT_NEAR(bip->value, inst.graph.total_weight(), 1e-12);
    EXPECT_NEAR(brute_force_optimum(inst.graph).value, bip->value, 1e-12);
    auto fc = generate_instance(Topology::fully_connected(), 4, ws, 3);
    EXPECT_FALSE(bipartite_optimum(fc.graph));
}

TEST(optimum, cap_and_require) {
    auto ws = default_weight_set();
    auto fc = generate_instance(Topology::fully_connected(), 30, ws, 1);
    EXPECT_THROW(exact_optimum(fc), OptimumUnavailableError);
    EXPECT_THROW(require_optimum(fc), OptimumUnavailableError);
    auto eagle = with_optimum(generate_instance(Topology::heavy_hex("eagle127"), 127, ws, 1));
    ASSERT_TRUE(eagle.optimum);
    EXPECT_NEAR(eagle.optimum->value, eagle.graph.total_weight(), 1e-9);
}

TEST(instance_io, round_trip_is_canonical) {
    auto ws = default_weight_set();
    for (auto tag : {"chain", "fc", "grid:3x3", "heavyhex:eagle127"}) {
        auto topo = Topology::parse(tag);
        std::size_t n = topo.valid_sizes().empty() ? 9 : topo.valid_sizes().front();
        auto inst = with_optimum(generate_instance(topo, n, ws, 11));
        auto text = instance_to_json(inst);
        auto back = instance_from_json(text);
        EXPECT_EQ(back.graph, inst.graph);
        EXPECT_EQ(back.topology, inst.topology);
        EXPECT_EQ(instance_to_json(back), text) << tag;
    }
}

TEST(instance_io, rejects_inconsistent_files) {
    auto ws = default_weight_set();
    auto inst = with_optimum(generate_instance(Topology::chain(), 4, ws, 2));
    auto text = instance_to_json(inst);
    EXPECT_THROW(instance_from_json("{"), ParseError);
    auto j = nlohmann::json::parse(text);
    j["optimum"]["value"] = 99.0;
    const auto bad_value = j.dump();
    EXPECT_THROW(instance_from_json(bad_value), ParseError);
}
