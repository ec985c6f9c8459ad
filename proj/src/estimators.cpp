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
#include <stdexcept>
#include <string>

#include "lrq/bench.hpp"

namespace lrq {

namespace {

void require_positive(std::uint64_t n, std::uint64_t p, std::uint64_t shots) {
    if (n == 0 || p == 0 || shots == 0) {
        throw std::invalid_argument("estimators need positive n, p and shots");
    }
}

}  // namespace

double hqc_estimate(std::uint64_t n, std::uint64_t p, std::uint64_t shots) {
    require_positive(n, p, shots);
    const double n1q = static_cast<double>(p * n + n);
    const double n2q = static_cast<double>(p * n * (n - 1) / 2);
    return 5.0 + (n1q + 10.0 * n2q + 5.0 * static_cast<double>(n)) * static_cast<double>(shots) / 5000.0;
}

std::string_view device_class_name(DeviceClass device) {
    return device == DeviceClass::FixedLayout ? "fixed" : "sequential";
}

DeviceClass parse_device_class(std::string_view name) {
    if (name == "fixed" || name == "parallel" || name == "fixed-layout") {
        return DeviceClass::FixedLayout;
    }
    if (name == "sequential" || name == "ion" || name == "ion-trap") {
        return DeviceClass::Sequential;
    }
    throw std::invalid_argument("unknown device class '" + std::string(name) + "' (expected fixed or sequential)");
}

CostEstimate runtime_projection(std::uint64_t n, std::uint64_t p, std::uint64_t shots, double t_2q,
                                DeviceClass device) {
    require_positive(n, p, shots);
    if (!(t_2q > 0.0) || !std::isfinite(t_2q)) {
        throw std::invalid_argument("two-qubit gate time must be positive");
    }
    const double depth = static_cast<double>(3 * p * n);
    const double n2q = static_cast<double>(p * n * (n - 1) / 2);
    CostEstimate out;
    out.hqc = hqc_estimate(n, p, shots);
    out.runtime_parallel = depth * t_2q * static_cast<double>(shots);
    out.runtime_sequential = n2q * t_2q * static_cast<double>(shots);
    out.device = device;
    return out;
}

}  // namespace lrq
