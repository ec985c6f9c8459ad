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


#include <cstdlib>
#include <filesystem>

#include "gtest/gtest.h"
#include "lrq/bench.hpp"
#include "lrq/error.hpp"
#include "lrq/io_util.hpp"

using namespace lrq;

namespace {

RunConfig chain_config() {
    RunConfig cfg;
    cfg.generate = {Topology::chain(), 8, default_weight_set(), 3};
    cfg.p_list = {1, 4, 8};
    cfg.shots = 400;
    cfg.basis = Basis::CZ;
    cfg.record_timing = false;
    return cfg;
}

std::filesystem::path temp_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("lrq_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(hqc_estimate, reference_value) {
    EXPECT_NEAR(hqc_estimate(20, 20, 50), 390.2, 1e-9);
    EXPECT_THROW(hqc_estimate(0, 1, 1), std::invalid_argument);
}

TEST(runtime_projection, both_device_classes) {
    auto fixed = runtime_projection(25, 100, 1000, 68e-9, DeviceClass::FixedLayout);
    EXPECT_NEAR(fixed.runtime(), 0.51, 1e-9);
    auto seq = runtime_projection(25, 100, 1000, 600e-6, parse_device_class("sequential"));
    EXPECT_NEAR(seq.runtime(), 18000.0, 1e-6);
    EXPECT_THROW(runtime_projection(25, 100, 1000, 0.0, DeviceClass::FixedLayout), std::invalid_argument);
    EXPECT_THROW(parse_device_class("warp"), std::invalid_argument);
}

TEST(point_seed, depends_on_both_coordinates) {
    EXPECT_EQ(point_seed(1, 3, 0.5), point_seed(1, 3, 0.5));
    EXPECT_NE(point_seed(1, 3, 0.5), point_seed(1, 4, 0.5));
    EXPECT_NE(point_seed(1, 3, 0.5), point_seed(1, 3, 0.6));
}

TEST(run_depth_sweep, produces_signal_and_is_deterministic) {
    auto cfg = chain_config();
    auto a = run_depth_sweep(cfg);
    auto b = run_depth_sweep(cfg);
    EXPECT_EQ(record_to_json(a), record_to_json(b));
    ASSERT_EQ(a.results.size(), 3U);
    ASSERT_TRUE(a.baseline);
    for (const auto &pt : a.results) {
        EXPECT_FALSE(pt.error);
        EXPECT_DOUBLE_EQ(pt.delta, 1.0);
        EXPECT_EQ(pt.counts.n_two_qubit, 2U * pt.p * 7);
    }
    EXPECT_GT(*a.results[2].r, *a.results[0].r);
    EXPECT_EQ(*a.results[2].regime, Regime::AboveRandom);
    EXPECT_TRUE(a.timestamp.empty());
}

TEST(run_depth_sweep, validates_config) {
    auto cfg = chain_config();
    cfg.p_list = {4, 2};
    EXPECT_THROW(run_depth_sweep(cfg), std::invalid_argument);
    cfg.p_list = {};
    EXPECT_THROW(run_depth_sweep(cfg), std::invalid_argument);
    cfg.p_list = {0, 1};
    EXPECT_THROW(run_depth_sweep(cfg), std::invalid_argument);
}

TEST(run_depth_sweep, failing_point_is_recorded) {
    auto cfg = chain_config();
    ::setenv("LRQ_SIM_CAP", "4", 1);
    auto rec = run_depth_sweep(cfg);
    ::unsetenv("LRQ_SIM_CAP");
    ASSERT_EQ(rec.results.size(), 3U);
    for (const auto &pt : rec.results) {
        ASSERT_TRUE(pt.error);
        EXPECT_FALSE(pt.r);
    }
    EXPECT_NE(record_to_csv(rec).find("error"), std::string::npos);
}

TEST(run_depth_sweep, export_only_skips_optimum_and_writes_circuits) {
    RunConfig cfg;
    cfg.generate = {Topology::fully_connected(), 30, default_weight_set(), 1};
    cfg.p_list = {1, 2};
    cfg.export_only = true;
    cfg.export_dir = temp_dir("export");
    cfg.record_timing = false;
    auto rec = run_depth_sweep(cfg);
    EXPECT_FALSE(rec.optimum_value);
    EXPECT_FALSE(rec.baseline);
    EXPECT_FALSE(rec.warnings.empty());  // n = 30 has no qasm_simulator entry
    EXPECT_EQ(rec.results[0].counts.n_two_qubit, 3U * 30 * 29 / 2);
    auto c = import_circuit(read_file(*cfg.export_dir / "circuit_p2.lrq"));
    EXPECT_EQ(count_gates(c).n_two_qubit, 2U * 3 * 30 * 29 / 2);
}

TEST(record_json, round_trip) {
    auto rec = run_depth_sweep(chain_config());
    auto text = record_to_json(rec);
    auto back = record_from_json(text);
    EXPECT_EQ(record_to_json(back), text);
    EXPECT_THROW(record_from_json("{}"), ParseError);
    EXPECT_THROW(record_from_json("not json"), ParseError);
}

TEST(record_csv, header_and_rows) {
    auto rec = run_depth_sweep(chain_config());
    auto csv = record_to_csv(rec);
    EXPECT_EQ(csv.rfind("p,delta,r,r_eff,regime,n_2q,depth\n", 0), 0U);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    auto dir = temp_dir("record");
    write_record(rec, dir / "run.json");
    EXPECT_TRUE(std::filesystem::exists(dir / "run.csv"));
    EXPECT_EQ(read_file(dir / "run.json"), record_to_json(rec));
}

TEST(performance_diagram, exact_and_sampled) {
    auto ws = default_weight_set();
    auto inst = with_optimum(generate_instance(Topology::chain(), 6, ws, 5));
    std::vector<std::size_t> ps{1, 5, 20};
    std::vector<double> deltas{0.1, 1.0};
    DiagramOptions exact;
    exact.shots = 0;
    auto d = performance_diagram(inst, ps, deltas, exact);
    ASSERT_EQ(d.r.size(), 6U);
    EXPECT_EQ(d.argmax_p, 2U);
    EXPECT_EQ(d.argmax_delta, 1U);
    EXPECT_GT(d.at(2, 1), d.at(0, 1));
    DiagramOptions sampled;
    sampled.shots = 2000;
    auto s = performance_diagram(inst, ps, deltas, sampled);
    EXPECT_NEAR(s.at(2, 1), d.at(2, 1), 0.03);
    auto csv = diagram_to_csv(d);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(certify, external_samples_match_in_process) {
    auto ws = default_weight_set();
    auto inst = with_optimum(generate_instance(Topology::chain(), 8, ws, 2));
    auto c = build_benchmark_circuit(inst, build_schedule(6, 1.0), Basis::CZ);
    auto samples = sample(c, 500, {}, 7);
    auto local = certify(samples, inst, {.seed = 4});
    auto ext = certify(ingest_samples_text(samples_to_text(samples), inst), inst, {.seed = 4});
    EXPECT_EQ(certificate_to_json(local), certificate_to_json(ext));
    EXPECT_TRUE(local.pass);
    EXPECT_EQ(local.baseline.shots_per_subset, 500U);
    EXPECT_THROW(ingest_samples_text("0101 3\n", inst), ParseError);
}

TEST(sections, placement_projection_and_ranking) {
    auto ws = default_weight_set();
    auto inst = with_optimum(generate_instance(Topology::chain(), 4, ws, 2));
    auto c = build_benchmark_circuit(inst, build_schedule(4, 1.0), Basis::CZ);
    std::vector<Qubit> good{5, 1, 3, 0};
    auto placed = place_on_device(c, good, 6);
    EXPECT_EQ(placed.n_qubits(), 6U);
    auto device_samples = sample(placed, 300, {}, 1);
    auto projected = project_samples(device_samples, good);
    EXPECT_EQ(projected.shots, 300U);
    const double exact = noisy_expected_cost(c, inst, {}, 1) / inst.optimum->value;
    EXPECT_NEAR(approximation_ratio(projected, inst), exact, 0.05);

    // A section whose samples are all zeros ranks last.
    SampleSet zeros;
    zeros.n_qubits = 4;
    zeros.add(Bitstring(4), 300);
    std::vector<std::pair<std::vector<Qubit>, SampleSet>> runs{{{0, 1, 2, 3}, zeros}, {good, projected}};
    auto ranked = rank_sections(inst, runs, {.seed = 1});
    EXPECT_EQ(ranked[0].section, good);
    EXPECT_FALSE(ranked[1].certificate.pass);
    EXPECT_THROW(place_on_device(c, std::vector<Qubit>{0, 0, 1, 2}, 6), std::invalid_argument);
}
