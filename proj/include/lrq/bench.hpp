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

#ifndef LRQ_BENCH_HPP
#define LRQ_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrq/circuit.hpp"
#include "lrq/problems.hpp"
#include "lrq/schedule.hpp"
#include "lrq/simulator.hpp"
#include "lrq/stats.hpp"

namespace lrq {

std::string_view tool_version();

// ---------------------------------------------------------------------------
// Cost and runtime estimators

/// Quantinuum hardware quantum cost for a fully connected LR-QAOA circuit:
///   HQC = 5 + (N_1q + 10 N_2q + 5 n) shots / 5000
/// with N_2q = p n (n - 1) / 2 and N_1q = p n + n (one RX per qubit per
/// layer plus the initial Hadamards).
double hqc_estimate(std::uint64_t n, std::uint64_t p, std::uint64_t shots);

enum class DeviceClass {
    FixedLayout,  // gates in a layer run in parallel; routed FC depth 3 p n
    Sequential,   // one two-qubit gate at a time; N_2q = p n (n - 1) / 2
};

std::string_view device_class_name(DeviceClass device);
DeviceClass parse_device_class(std::string_view name);

struct CostEstimate {
    double hqc = 0.0;
    double runtime_parallel = 0.0;    // seconds
    double runtime_sequential = 0.0;  // seconds
    DeviceClass device = DeviceClass::FixedLayout;

    /// Runtime under the requested device class.
    double runtime() const {
        return device == DeviceClass::FixedLayout ? runtime_parallel : runtime_sequential;
    }
};

/// Cumulative two-qubit gate time of a fully connected LR-QAOA run. Both
/// models are filled in with the same t_2q; `device` selects runtime().
CostEstimate runtime_projection(std::uint64_t n, std::uint64_t p, std::uint64_t shots, double t_2q,
                                DeviceClass device);

// ---------------------------------------------------------------------------
// Depth sweeps

struct InstanceSpec {
    Topology topology;
    std::size_t n = 0;
    std::vector<double> weight_set = default_weight_set();
    std::uint64_t seed = 0;
};

struct RunConfig {
    /// Used when set; otherwise `generate` describes the instance.
    std::optional<ProblemInstance> instance;
    InstanceSpec generate;

    std::vector<std::size_t> p_list;
    std::optional<double> delta;  // empty: default_delta()
    std::string backend_class = "qasm_simulator";
    Basis basis = Basis::CZ;
    std::uint64_t shots = 1000;
    std::optional<NoiseModel> noise;
    std::uint64_t trajectories = 0;  // 0: one trajectory per shot

    std::uint64_t sim_seed = 1;
    std::uint64_t baseline_seed = 2;
    std::size_t baseline_subsets = kDefaultBaselineSubsets;

    std::vector<Qubit> chain_order;  // line order for routed FC circuits
    bool export_only = false;
    std::optional<std::filesystem::path> export_dir;
    bool record_timing = true;
};

struct PointResult {
    std::size_t p = 0;
    double delta = 0.0;
    std::optional<double> r;
    std::optional<double> r_eff;
    std::optional<Regime> regime;
    CountReport counts;
    double wall_time = 0.0;
    std::optional<std::string> error;
};

struct BenchmarkRecord {
    RunConfig config;
    std::string topology;
    std::size_t n = 0;
    std::size_t n_edges = 0;
    std::uint64_t instance_seed = 0;
    std::optional<double> optimum_value;
    std::optional<BaselineStats> baseline;
    std::vector<PointResult> results;
    std::vector<std::string> warnings;
    std::string tool_version;
    std::string timestamp;  // empty when timing is disabled
};

/// Validates the config and returns its instance with the optimum filled in
/// (left empty in export-only mode when it cannot be computed).
ProblemInstance resolve_instance(const RunConfig &config);

/// Circuit executed for one (instance, schedule, basis): line-routed for
/// fully connected instances in the CZ/CNOT/RoutedZZ bases, the direct
/// build otherwise.
Circuit build_benchmark_circuit(const ProblemInstance &instance, const RampSchedule &schedule, Basis basis,
                                std::span<const Qubit> chain_order = {});

/// Seed shared by every evaluation of the grid point (p, delta).
std::uint64_t point_seed(std::uint64_t base, std::size_t p, double delta);

BenchmarkRecord run_depth_sweep(const RunConfig &config);

std::string record_to_json(const BenchmarkRecord &record);
/// Reads the fields needed to re-check a stored record.
BenchmarkRecord record_from_json(std::string_view text);
/// Flat "p,delta,r,r_eff,regime,n_2q,depth" table.
std::string record_to_csv(const BenchmarkRecord &record);
/// Writes `path` (JSON) and the CSV next to it with extension .csv.
void write_record(const BenchmarkRecord &record, const std::filesystem::path &path);

// ---------------------------------------------------------------------------
// Performance diagrams

struct DiagramOptions {
    Basis basis = Basis::AbstractZZ;
    /// Shots per grid point; 0 evaluates the exact expected cut instead.
    std::uint64_t shots = 1000;
    NoiseModel noise;
    std::uint64_t trajectories = 0;  // for shots == 0 with noise: trajectories per point
    std::uint64_t sim_seed = 1;
};

struct DiagramResult {
    std::vector<std::size_t> p_grid;
    std::vector<double> delta_grid;
    std::vector<double> r;  // r[i * delta_grid.size() + j] for p_grid[i], delta_grid[j]
    std::size_t argmax_p = 0;      // index into p_grid
    std::size_t argmax_delta = 0;  // index into delta_grid

    double at(std::size_t i, std::size_t j) const { return r[i * delta_grid.size() + j]; }
};

DiagramResult performance_diagram(const ProblemInstance &instance, std::span<const std::size_t> p_grid,
                                  std::span<const double> delta_grid, const DiagramOptions &options);
std::string diagram_to_csv(const DiagramResult &diagram);

// ---------------------------------------------------------------------------
// External samples

SampleSet ingest_samples_text(std::string_view text, const ProblemInstance &instance);
SampleSet ingest_samples(const std::filesystem::path &path, const ProblemInstance &instance);

struct BaselineConfig {
    std::optional<std::uint64_t> shots_per_subset;  // empty: same as the sample set
    std::size_t n_subsets = kDefaultBaselineSubsets;
    std::uint64_t seed = 0;
};

struct Certificate {
    double r = 0.0;
    double r_eff = 0.0;
    Regime regime = Regime::WithinRandom;
    bool pass = false;
    BaselineStats baseline;
};

Certificate certify(const SampleSet &samples, const ProblemInstance &instance, const BaselineConfig &config = {});
std::string certificate_to_json(const Certificate &certificate);

// ---------------------------------------------------------------------------
// Device-section selection

/// Places a circuit on `device_qubits` qubits: logical qubit i goes to
/// physical qubit section[i].
Circuit place_on_device(const Circuit &circuit, std::span<const Qubit> section, std::size_t device_qubits);

/// Restricts device-wide samples to the section's qubits, in section order.
SampleSet project_samples(const SampleSet &device_samples, std::span<const Qubit> section);

struct SectionResult {
    std::vector<Qubit> section;
    Certificate certificate;
};

/// Certifies each candidate section and sorts by approximation ratio,
/// highest first (ties keep input order).
std::vector<SectionResult> rank_sections(const ProblemInstance &instance,
                                         std::span<const std::pair<std::vector<Qubit>, SampleSet>> runs,
                                         const BaselineConfig &config = {});

}  // namespace lrq

#endif
