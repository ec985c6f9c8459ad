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

#ifndef LRQ_SCHEDULE_HPP
#define LRQ_SCHEDULE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lrq/problems.hpp"

namespace lrq {

/// Linear-ramp angles for p layers:
///   betas[k]  = (1 - k/p) * delta_beta
///   gammas[k] = ((k + 1)/p) * delta_gamma
struct RampSchedule {
    std::size_t p = 0;
    double delta_beta = 0.0;
    double delta_gamma = 0.0;
    std::vector<double> betas;
    std::vector<double> gammas;
};

RampSchedule build_schedule(std::size_t p, double delta_beta, double delta_gamma);
inline RampSchedule build_schedule(std::size_t p, double delta) {
    return build_schedule(p, delta, delta);
}

/// Two-column text table "k beta gamma".
std::string format_schedule(const RampSchedule &schedule);

struct DeltaLookup {
    double value = 1.0;
    /// True when a fully connected size above 15 had no table entry for the
    /// backend and the 0.63 fallback was used.
    bool fallback = false;
    std::string warning;
};

/// Ramp scale used by the benchmark protocol. Chain and native layouts use
/// 1.0; fully connected instances use 0.63 up to 15 nodes and the per-backend
/// table above that.
DeltaLookup default_delta(const Topology &topology, std::size_t n, std::string_view backend_class);

}  // namespace lrq

#endif
