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

#ifndef LRQ_STATS_HPP
#define LRQ_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "lrq/problems.hpp"
#include "lrq/simulator.hpp"

namespace lrq {

/// Approximation-ratio distribution of a uniform random sampler, measured
/// over `n_subsets` subsets of `shots_per_subset` bitstrings each. sigma is
/// the population standard deviation across subsets.
struct BaselineStats {
    std::uint64_t shots_per_subset = 0;
    std::size_t n_subsets = 0;
    double mean = 0.0;
    double sigma = 0.0;
    double threshold = 0.0;  // mean + 3 sigma
    std::uint64_t seed = 0;

    friend bool operator==(const BaselineStats &, const BaselineStats &) = default;
};

enum class Regime { AboveRandom, WithinRandom, BelowRandom };

std::string_view regime_name(Regime regime);
Regime parse_regime(std::string_view name);

/// Mean cut of the samples.
double mean_cost(const SampleSet &samples, const WeightedGraph &graph);

/// Mean sampled cut divided by the optimum cut. Requires instance.optimum.
double approximation_ratio(const SampleSet &samples, const ProblemInstance &instance);

inline constexpr std::size_t kDefaultBaselineSubsets = 100;

BaselineStats random_baseline(const ProblemInstance &instance, std::uint64_t shots_per_subset,
                              std::size_t n_subsets = kDefaultBaselineSubsets, std::uint64_t seed = 0);

/// (r_max - r_rand) / (1 - r_rand) with r_rand = baseline.threshold.
double effective_ratio(double r_max, const BaselineStats &baseline);

/// Above when r > mean + 3 sigma, below when r < mean - 3 sigma.
Regime classify_regime(double r, const BaselineStats &baseline);

inline bool passes(Regime regime) { return regime == Regime::AboveRandom; }

enum class CorrelationConvention {
    Binary,  // s in {0, 1}
    Spin,    // s in {+1, -1}; analysis only
};

struct CorrelationMatrix {
    std::size_t n = 0;
    std::vector<double> entries;  // row-major n x n

    double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// |C_ij| = |(1/N) sum_n s_i^n s_j^n| over all shots.
CorrelationMatrix correlation_matrix(const SampleSet &samples,
                                     CorrelationConvention convention = CorrelationConvention::Binary);

}  // namespace lrq

#endif
