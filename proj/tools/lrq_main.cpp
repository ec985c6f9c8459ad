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


// Command-line front end: gen, run, diagram, export, simulate, certify,
// estimate.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrq/bench.hpp"
#include "lrq/error.hpp"
#include "lrq/io_util.hpp"

namespace {

using namespace lrq;

struct InstanceArgs {
    std::string topology = "chain";
    std::size_t nq = 0;
    std::uint64_t seed = 0;
    std::vector<double> weights = default_weight_set();
    std::string instance_path;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--topology", topology, "chain, fc, heavyhex:<id>, grid:RxC or grid:<id>")
            ->capture_default_str();
        cmd->add_option("--nq", nq, "number of qubits (nodes)");
        cmd->add_option("--seed", seed, "instance seed")->capture_default_str();
        cmd->add_option("--weights", weights, "allowed edge weights")->delimiter(',');
        cmd->add_option("--instance", instance_path, "instance file; overrides the generator flags");
    }

    std::size_t size(const Topology &topo) const {
        if (nq != 0) {
            return nq;
        }
        const auto sizes = topo.valid_sizes();
        if (sizes.size() == 1) {
            return sizes.front();
        }
        throw std::invalid_argument("--nq is required for topology " + topo.tag());
    }

    ProblemInstance load(bool want_optimum = true) const {
        if (!instance_path.empty()) {
            auto inst = load_instance(instance_path);
            if (want_optimum && !inst.optimum) {
                inst = with_optimum(std::move(inst));
            }
            return inst;
        }
        const auto topo = Topology::parse(topology);
        auto inst = generate_instance(topo, size(topo), weights, seed);
        if (want_optimum) {
            inst = with_optimum(std::move(inst));
        }
        return inst;
    }
};

void emit(const std::string &out, const std::string &text) {
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_file_atomic(out, text);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"LR-QAOA benchmarking toolkit"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    // gen
    InstanceArgs gen_args;
    std::string gen_out;
    bool gen_no_optimum = false;
    auto *gen = app.add_subcommand("gen", "generate a weighted MaxCut instance");
    gen_args.add_to(gen);
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_flag("--no-optimum", gen_no_optimum, "skip the exact optimum");

    // run
    InstanceArgs run_args;
    RunConfig run_cfg;
    std::vector<std::size_t> run_p{1, 2, 3, 5, 10};
    std::optional<double> run_delta;
    std::string run_basis = "cz";
    double run_eps = 0.0;
    std::uint64_t run_noise_seed = 3;
    std::string run_out;
    std::string run_export_dir;
    bool run_no_timing = false;
    auto *run = app.add_subcommand("run", "depth sweep with baseline and regime classification");
    run_args.add_to(run);
    run->add_option("--p", run_p, "depths, ascending")->delimiter(',')->capture_default_str();
    run->add_option("--delta", run_delta, "ramp scale (default: lookup table)");
    run->add_option("--backend", run_cfg.backend_class, "backend class for the Delta table")->capture_default_str();
    run->add_option("--basis", run_basis, "abstract_zz, routed_zz, fractional_zz, cz, cnot")->capture_default_str();
    run->add_option("--shots", run_cfg.shots, "shots per depth")->capture_default_str();
    run->add_option("--eps", run_eps, "two-qubit depolarizing probability")->capture_default_str();
    run->add_option("--noise-seed", run_noise_seed, "noise stream seed")->capture_default_str();
    run->add_option("--trajectories", run_cfg.trajectories, "noise trajectories per depth (0: one per shot)");
    run->add_option("--sim-seed", run_cfg.sim_seed, "sampling seed")->capture_default_str();
    run->add_option("--baseline-seed", run_cfg.baseline_seed, "random-baseline seed")->capture_default_str();
    run->add_option("--subsets", run_cfg.baseline_subsets, "random-baseline subsets")->capture_default_str();
    run->add_option("--out", run_out, "record JSON path; the CSV is written next to it (default stdout)");
    run->add_flag("--export-only", run_cfg.export_only, "build and count circuits without simulating");
    run->add_option("--export-dir", run_export_dir, "write circuits here in export-only mode");
    run->add_flag("--no-timing", run_no_timing, "omit timestamp and wall times (byte-stable records)");

    // diagram
    InstanceArgs dia_args;
    DiagramOptions dia_opts;
    std::vector<std::size_t> dia_p{1, 2, 5, 10, 20};
    std::vector<double> dia_delta{0.25, 0.5, 0.75, 1.0};
    std::string dia_basis = "abstract_zz";
    std::string dia_out;
    auto *diagram = app.add_subcommand("diagram", "approximation ratio over a (p, Delta) grid");
    dia_args.add_to(diagram);
    diagram->add_option("--p", dia_p, "depth grid")->delimiter(',')->capture_default_str();
    diagram->add_option("--delta", dia_delta, "Delta grid")->delimiter(',')->capture_default_str();
    diagram->add_option("--basis", dia_basis, "circuit basis")->capture_default_str();
    diagram->add_option("--shots", dia_opts.shots, "shots per point; 0 evaluates the exact expectation")
        ->capture_default_str();
    diagram->add_option("--eps", dia_opts.noise.eps_2q, "two-qubit depolarizing probability");
    diagram->add_option("--trajectories", dia_opts.trajectories, "noise trajectories per point");
    diagram->add_option("--out", dia_out, "CSV output (default stdout)");

    // export
    InstanceArgs exp_args;
    std::vector<std::size_t> exp_p{1};
    std::optional<double> exp_delta;
    std::string exp_backend = "qasm_simulator";
    std::string exp_basis = "cz";
    std::string exp_format = "neutral";
    std::string exp_out = ".";
    auto *exporter = app.add_subcommand("export", "write benchmark circuits for external execution");
    exp_args.add_to(exporter);
    exporter->add_option("--p", exp_p, "depths")->delimiter(',')->capture_default_str();
    exporter->add_option("--delta", exp_delta, "ramp scale (default: lookup table)");
    exporter->add_option("--backend", exp_backend, "backend class for the Delta table")->capture_default_str();
    exporter->add_option("--basis", exp_basis, "circuit basis")->capture_default_str();
    exporter->add_option("--format", exp_format, "neutral or qasm")->capture_default_str();
    exporter->add_option("--out", exp_out, "output directory")->capture_default_str();

    // simulate
    std::string sim_circuit;
    std::uint64_t sim_shots = 1000;
    double sim_eps = 0.0;
    std::uint64_t sim_seed = 1;
    std::uint64_t sim_traj = 0;
    std::string sim_out;
    auto *simulate_cmd = app.add_subcommand("simulate", "sample an exported circuit into a sample file");
    simulate_cmd->add_option("--circuit", sim_circuit, "circuit file")->required();
    simulate_cmd->add_option("--shots", sim_shots, "shots")->capture_default_str();
    simulate_cmd->add_option("--eps", sim_eps, "two-qubit depolarizing probability");
    simulate_cmd->add_option("--seed", sim_seed, "sampling seed")->capture_default_str();
    simulate_cmd->add_option("--trajectories", sim_traj, "noise trajectories (0: one per shot)");
    simulate_cmd->add_option("--out", sim_out, "sample file (default stdout)");

    // certify
    InstanceArgs cert_args;
    std::string cert_samples;
    BaselineConfig cert_cfg;
    std::uint64_t cert_subset_shots = 0;
    std::string cert_out;
    auto *certify_cmd = app.add_subcommand("certify", "certify external samples against the random baseline");
    cert_args.add_to(certify_cmd);
    certify_cmd->add_option("--samples", cert_samples, "sample file")->required();
    certify_cmd->add_option("--baseline-seed", cert_cfg.seed, "random-baseline seed");
    certify_cmd->add_option("--subsets", cert_cfg.n_subsets, "random-baseline subsets")->capture_default_str();
    certify_cmd->add_option("--subset-shots", cert_subset_shots, "shots per subset (default: sample count)");
    certify_cmd->add_option("--out", cert_out, "certificate JSON (default stdout)");

    // estimate
    std::uint64_t est_nq = 0;
    std::uint64_t est_p = 0;
    std::uint64_t est_shots = 1000;
    double est_t2q = 0.0;
    std::string est_device = "fixed";
    auto *estimate = app.add_subcommand("estimate", "HQC and runtime estimates for fully connected runs");
    estimate->add_option("--nq", est_nq, "number of qubits")->required();
    estimate->add_option("--p", est_p, "depth")->required();
    estimate->add_option("--shots", est_shots, "shots")->capture_default_str();
    estimate->add_option("--t2q", est_t2q, "two-qubit gate time in seconds")->required();
    estimate->add_option("--device", est_device, "fixed or sequential")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            emit(gen_out, instance_to_json(gen_args.load(!gen_no_optimum)));
        } else if (*run) {
            run_cfg.p_list = run_p;
            run_cfg.delta = run_delta;
            run_cfg.basis = parse_basis(run_basis);
            if (run_eps > 0.0) {
                run_cfg.noise = NoiseModel{run_eps, run_noise_seed};
            }
            run_cfg.record_timing = !run_no_timing;
            if (!run_export_dir.empty()) {
                run_cfg.export_dir = run_export_dir;
            }
            run_cfg.instance = run_args.load(false);
            const auto record = run_depth_sweep(run_cfg);
            if (run_out.empty()) {
                std::cout << record_to_json(record);
            } else {
                write_record(record, run_out);
            }
            for (const auto &w : record.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
        } else if (*diagram) {
            dia_opts.basis = parse_basis(dia_basis);
            const auto inst = dia_args.load();
            emit(dia_out, diagram_to_csv(performance_diagram(inst, dia_p, dia_delta, dia_opts)));
        } else if (*exporter) {
            const auto inst = exp_args.load(false);
            const auto basis = parse_basis(exp_basis);
            const bool qasm = exp_format == "qasm";
            if (!qasm && exp_format != "neutral") {
                throw std::invalid_argument("unknown format '" + exp_format + "' (expected neutral or qasm)");
            }
            double delta = 0.0;
            if (exp_delta) {
                delta = *exp_delta;
            } else {
                const auto lookup = default_delta(inst.topology, inst.n_nodes(), exp_backend);
                delta = lookup.value;
                if (lookup.fallback) {
                    std::cerr << "warning: " << lookup.warning << "\n";
                }
            }
            std::filesystem::create_directories(exp_out);
            save_instance(inst, std::filesystem::path(exp_out) / "instance.json");
            for (std::size_t p : exp_p) {
                const auto circuit = build_benchmark_circuit(inst, build_schedule(p, delta), basis);
                const auto name = "circuit_p" + std::to_string(p) + (qasm ? ".qasm" : ".lrq");
                write_file_atomic(std::filesystem::path(exp_out) / name,
                                  export_circuit(circuit, qasm ? CircuitFormat::Qasm2 : CircuitFormat::Neutral));
                const auto counts = count_gates(circuit);
                std::cout << name << " n_2q=" << counts.n_two_qubit << " depth=" << counts.two_qubit_depth << "\n";
            }
        } else if (*simulate_cmd) {
            const auto circuit = import_circuit(read_file(sim_circuit));
            const auto samples = sample(circuit, sim_shots, NoiseModel{sim_eps, derive_seed(sim_seed, 1)},
                                        sim_seed, TrajectoryOptions{sim_traj});
            emit(sim_out, samples_to_text(samples));
        } else if (*certify_cmd) {
            const auto inst = cert_args.load();
            const auto samples = ingest_samples(cert_samples, inst);
            if (cert_subset_shots != 0) {
                cert_cfg.shots_per_subset = cert_subset_shots;
            }
            const auto cert = certify(samples, inst, cert_cfg);
            emit(cert_out, certificate_to_json(cert));
            std::cerr << (cert.pass ? "PASS" : "FAIL") << ": r=" << format_double(cert.r) << " "
                      << regime_name(cert.regime) << "\n";
            return cert.pass ? 0 : 3;
        } else if (*estimate) {
            const auto est = runtime_projection(est_nq, est_p, est_shots, est_t2q, parse_device_class(est_device));
            std::printf("hqc %.6g\nruntime_parallel_s %.6g\nruntime_sequential_s %.6g\nruntime_s %.6g\n", est.hqc,
                        est.runtime_parallel, est.runtime_sequential, est.runtime());
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
