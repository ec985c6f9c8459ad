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

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "lrq/error.hpp"
#include "lrq/io_util.hpp"
#include "lrq/problems.hpp"

namespace lrq {

namespace {

constexpr int kInstanceVersion = 1;
constexpr const char *kBitOrder = "char i = node i";

}  // namespace

std::string instance_to_json(const ProblemInstance &instance) {
    nlohmann::ordered_json j;
    j["version"] = kInstanceVersion;
    j["topology"] = instance.topology.tag();
    j["n"] = instance.n_nodes();
    j["seed"] = instance.seed;
    j["weight_set"] = instance.weight_set;
    j["bit_order"] = kBitOrder;
    auto edges = nlohmann::ordered_json::array();
    for (const auto &e : instance.graph.edges()) {
        edges.push_back({e.u, e.v, e.w});
    }
    j["edges"] = std::move(edges);
    if (instance.optimum) {
        j["optimum"] = {{"bits", instance.optimum->bits.to_string()}, {"value", instance.optimum->value}};
    } else {
        j["optimum"] = nullptr;
    }
    return j.dump(1) + "\n";
}

ProblemInstance instance_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("version").get<int>() != kInstanceVersion) {
            throw ParseError("unsupported instance version " + j.at("version").dump());
        }
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto &row : j.at("edges")) {
            if (!row.is_array() || row.size() != 3) {
                throw ParseError("each edge must be [u, v, w]");
            }
            edges.push_back({row[0].get<NodeIndex>(), row[1].get<NodeIndex>(), row[2].get<double>()});
        }
        ProblemInstance instance;
        instance.graph = WeightedGraph(n, std::move(edges));
        const auto tag = j.at("topology").get<std::string>();
        if (tag == "custom") {
            std::vector<Coupling> couplings;
            for (const auto &e : instance.graph.edges()) {
                couplings.emplace_back(e.u, e.v);
            }
            instance.topology = Topology::custom(std::move(couplings));
        } else {
            instance.topology = Topology::parse(tag);
            const auto expected = instance.topology.coupling_map(n);
            bool same = expected.size() == instance.graph.n_edges();
            for (std::size_t i = 0; same && i < expected.size(); ++i) {
                const auto &e = instance.graph.edges()[i];
                same = expected[i] == Coupling{e.u, e.v};
            }
            if (!same) {
                throw ParseError("edge set does not match topology " + tag);
            }
        }
        instance.seed = j.value("seed", std::uint64_t{0});
        instance.weight_set = j.at("weight_set").get<std::vector<double>>();
        for (const auto &e : instance.graph.edges()) {
            if (std::find(instance.weight_set.begin(), instance.weight_set.end(), e.w) ==
                instance.weight_set.end()) {
                throw ParseError("edge weight " + format_double(e.w) + " is not in weight_set");
            }
        }
        if (j.contains("optimum") && !j.at("optimum").is_null()) {
            const auto &o = j.at("optimum");
            Solution s{Bitstring::parse(o.at("bits").get<std::string>()), o.at("value").get<double>()};
            if (s.bits.size() != n) {
                throw ParseError("optimum bitstring length does not match n");
            }
            const double c = cost(instance.graph, s.bits);
            if (std::abs(c - s.value) > 1e-9 * std::max(1.0, std::abs(s.value))) {
                throw ParseError("optimum value " + format_double(s.value) +
                                 " disagrees with the cut of its bitstring (" + format_double(c) + ")");
            }
            instance.optimum = std::move(s);
        }
        return instance;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed instance file: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

void save_instance(const ProblemInstance &instance, const std::filesystem::path &path) {
    write_file_atomic(path, instance_to_json(instance));
}

ProblemInstance load_instance(const std::filesystem::path &path) {
    return instance_from_json(read_file(path));
}

}  // namespace lrq
