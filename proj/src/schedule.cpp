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

#include "lrq/schedule.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lrq/io_util.hpp"

namespace lrq {

RampSchedule build_schedule(std::size_t p, double delta_beta, double delta_gamma) {
    if (p == 0) {
        throw std::invalid_argument("schedule needs p >= 1");
    }
    if (!(delta_beta > 0.0) || !(delta_gamma > 0.0) || !std::isfinite(delta_beta) ||
        !std::isfinite(delta_gamma)) {
        throw std::invalid_argument("ramp deltas must be positive and finite");
    }
    RampSchedule s;
    s.p = p;
    s.delta_beta = delta_beta;
    s.delta_gamma = delta_gamma;
    s.betas.resize(p);
    s.gammas.resize(p);
    const double pd = static_cast<double>(p);
    for (std::size_t k = 0; k < p; ++k) {
        // (p - k)/p rounds once, so endpoints like 1/100 come out exact.
        s.betas[k] = (static_cast<double>(p - k) / pd) * delta_beta;
        s.gammas[k] = (static_cast<double>(k + 1) / pd) * delta_gamma;
    }
    return s;
}

std::string format_schedule(const RampSchedule &schedule) {
    std::ostringstream out;
    out << "# k beta gamma\n";
    for (std::size_t k = 0; k < schedule.p; ++k) {
        out << k << ' ' << format_double(schedule.betas[k]) << ' ' << format_double(schedule.gammas[k])
            << '\n';
    }
    return out.str();
}

namespace {

struct DeltaEntry {
    std::string_view backend;
    std::size_t n;  // 0 matches every n > 15
    double delta;
};

// Values used on each backend for fully connected problems above 15 qubits.
constexpr std::array<DeltaEntry, 17> kDeltaTable = {{
    {"ibm_fez", 0, 0.63},
    {"ibm_marrakesh", 0, 0.63},
    {"ibm_torino", 17, 0.4},
    {"ibm_torino", 20, 0.3},
    {"ibm_brisbane", 16, 0.5},
    {"ibm_brisbane", 17, 0.4},
    {"ibm_brisbane", 20, 0.3},
    {"h1-1e", 20, 0.3},
    {"h2-1e", 25, 0.5},
    {"h2-1e", 30, 0.4},
    {"h2-1", 40, 0.2},
    {"h2-1", 50, 0.2},
    {"h2-1", 56, 0.2},
    {"ionq_aria_2", 17, 0.63},
    {"ionq_aria_2", 20, 0.3},
    {"qasm_simulator", 20, 0.3},
    {"qasm_simulator", 25, 0.4},
}};

std::string normalize_backend(std::string_view backend) {
    std::string out(backend);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (std::string_view prefix : {"quantinuum_", "quantinuum."}) {
        if (out.starts_with(prefix)) {
            out.erase(0, prefix.size());
        }
    }
    return out;
}

}  // namespace

DeltaLookup default_delta(const Topology &topology, std::size_t n, std::string_view backend_class) {
    if (topology.kind() != TopologyKind::FullyConnected) {
        return {1.0, false, {}};
    }
    if (n <= 15) {
        return {0.63, false, {}};
    }
    const std::string key = normalize_backend(backend_class);
    auto matches = [&](const DeltaEntry &e) { return e.backend == key && (e.n == 0 || e.n == n); };
    for (const auto &e : kDeltaTable) {
        if (matches(e)) {
            return {e.delta, false, {}};
        }
    }
    return {0.63, true,
            "no ramp-scale entry for backend '" + std::string(backend_class) + "' at n=" +
                std::to_string(n) + "; falling back to 0.63"};
}

}  // namespace lrq
