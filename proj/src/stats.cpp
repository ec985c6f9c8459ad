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

#include "lrq/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lrq/error.hpp"
#include "lrq/parallel.hpp"
#include "lrq/rng.hpp"

namespace lrq {

std::string_view regime_name(Regime regime) {
    switch (regime) {
        case Regime::AboveRandom:
            return "above_random";
        case Regime::WithinRandom:
            return "within_random";
        case Regime::BelowRandom:
            return "below_random";
    }
    return "?";
}

Regime parse_regime(std::string_view name) {
    for (Regime r : {Regime::AboveRandom, Regime::WithinRandom, Regime::BelowRandom}) {
        if (regime_name(r) == name) {
            return r;
        }
    }
    throw std::invalid_argument("unknown regime '" + std::string(name) + "'");
}

double mean_cost(const SampleSet &samples, const WeightedGraph &graph) {
    if (samples.n_qubits != graph.n_nodes()) {
        throw std::invalid_argument("samples have " + std::to_string(samples.n_qubits) +
                                    " bits, instance has " + std::to_string(graph.n_nodes()) + " nodes");
    }
    if (samples.shots == 0) {
        throw std::invalid_argument("sample set is empty");
    }
    double total = 0.0;
    for (const auto &[bits, count] : samples.counts) {
        total += static_cast<double>(count) * cost(graph, bits);
    }
    return total / static_cast<double>(samples.shots);
}

double approximation_ratio(const SampleSet &samples, const ProblemInstance &instance) {
    const auto &opt = require_optimum(instance);
    return mean_cost(samples, instance.graph) / opt.value;
}

namespace {

double random_cut(const WeightedGraph &graph, Rng &rng, std::vector<std::uint64_t> &words) {
    for (auto &w : words) {
        w = rng.next();
    }
    double total = 0.0;
    for (const auto &e : graph.edges()) {
        const auto bu = (words[e.u >> 6] >> (e.u & 63)) & 1U;
        const auto bv = (words[e.v >> 6] >> (e.v & 63)) & 1U;
        if (bu != bv) {
            total += e.w;
        }
    }
    return total;
}

}  // namespace

BaselineStats random_baseline(const ProblemInstance &instance, std::uint64_t shots_per_subset,
                              std::size_t n_subsets, std::uint64_t seed) {
    if (shots_per_subset == 0) {
        throw std::invalid_argument("random baseline needs shots_per_subset >= 1");
    }
    if (n_subsets < 2) {
        throw std::invalid_argument("random baseline needs at least 2 subsets");
    }
    const double optimum = require_optimum(instance).value;
    const auto &graph = instance.graph;
    std::vector<double> ratios(n_subsets);
    parallel_for(n_subsets, [&](std::size_t s) {
        Rng rng(derive_seed(seed, s));
        std::vector<std::uint64_t> words((graph.n_nodes() + 63) / 64);
        double total = 0.0;
        for (std::uint64_t k = 0; k < shots_per_subset; ++k) {
            total += random_cut(graph, rng, words);
        }
        ratios[s] = total / static_cast<double>(shots_per_subset) / optimum;
    });
    double mean = 0.0;
    for (double r : ratios) {
        mean += r;
    }
    mean /= static_cast<double>(n_subsets);
    double var = 0.0;
    for (double r : ratios) {
        var += (r - mean) * (r - mean);
    }
    var /= static_cast<double>(n_subsets);
    BaselineStats out;
    out.shots_per_subset = shots_per_subset;
    out.n_subsets = n_subsets;
    out.mean = mean;
    out.sigma = std::sqrt(var);
    out.threshold = mean + 3.0 * out.sigma;
    out.seed = seed;
    return out;
}

double effective_ratio(double r_max, const BaselineStats &baseline) {
    if (!(baseline.threshold < 1.0)) {
        throw Error("degenerate baseline: random threshold " + std::to_string(baseline.threshold) +
                    " is not below 1");
    }
    return (r_max - baseline.threshold) / (1.0 - baseline.threshold);
}

Regime classify_regime(double r, const BaselineStats &baseline) {
    if (r > baseline.mean + 3.0 * baseline.sigma) {
        return Regime::AboveRandom;
    }
    if (r < baseline.mean - 3.0 * baseline.sigma) {
        return Regime::BelowRandom;
    }
    return Regime::WithinRandom;
}

CorrelationMatrix correlation_matrix(const SampleSet &samples, CorrelationConvention convention) {
    if (samples.shots == 0) {
        throw std::invalid_argument("correlation matrix needs at least one shot");
    }
    const std::size_t n = samples.n_qubits;
    CorrelationMatrix m;
    m.n = n;
    m.entries.assign(n * n, 0.0);
    std::vector<double> s(n);
    for (const auto &[bits, count] : samples.counts) {
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = convention == CorrelationConvention::Binary ? (bits[i] ? 1.0 : 0.0) : (bits[i] ? -1.0 : 1.0);
        }
        const double c = static_cast<double>(count);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                m.entries[i * n + j] += c * s[i] * s[j];
            }
        }
    }
    const double inv = 1.0 / static_cast<double>(samples.shots);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = std::abs(m.entries[i * n + j] * inv);
            m.entries[i * n + j] = v;
            m.entries[j * n + i] = v;
        }
    }
    return m;
}

}  // namespace lrq
