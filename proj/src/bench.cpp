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

#include "lrq/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lrq/error.hpp"
#include "lrq/io_util.hpp"
#include "lrq/parallel.hpp"

namespace lrq {

using nlohmann::ordered_json;

std::string_view tool_version() { return LRQ_VERSION; }

ProblemInstance resolve_instance(const RunConfig &config) {
    if (config.p_list.empty()) {
        throw std::invalid_argument("p_list must not be empty");
    }
    if (!std::is_sorted(config.p_list.begin(), config.p_list.end()) ||
        std::adjacent_find(config.p_list.begin(), config.p_list.end()) != config.p_list.end()) {
        throw std::invalid_argument("p_list must be strictly ascending");
    }
    if (config.p_list.front() == 0) {
        throw std::invalid_argument("p values must be at least 1");
    }
    if (config.shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    ProblemInstance instance = config.instance
                                   ? *config.instance
                                   : generate_instance(config.generate.topology, config.generate.n,
                                                       config.generate.weight_set, config.generate.seed);
    if (!instance.optimum) {
        try {
            instance.optimum = exact_optimum(instance);
        } catch (const OptimumUnavailableError &) {
            if (!config.export_only) {
                throw;
            }
        }
    }
    return instance;
}

Circuit build_benchmark_circuit(const ProblemInstance &instance, const RampSchedule &schedule, Basis basis,
                                std::span<const Qubit> chain_order) {
    const bool routed = instance.topology.kind() == TopologyKind::FullyConnected &&
                        (basis == Basis::CZ || basis == Basis::CNOT || basis == Basis::RoutedZZ);
    if (routed) {
        return decompose_to_basis(transpile_swap_network(instance, schedule, chain_order), basis);
    }
    return decompose_to_basis(build_lr_qaoa(instance, schedule), basis);
}

std::uint64_t point_seed(std::uint64_t base, std::size_t p, double delta) {
    return derive_seed(derive_seed(base, p), std::bit_cast<std::uint64_t>(delta));
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

NoiseModel point_noise(const NoiseModel &noise, std::size_t p, double delta) {
    return {noise.eps_2q, point_seed(noise.rng_seed, p, delta)};
}

// Sampled approximation ratio of one grid point.
double sampled_ratio(const ProblemInstance &instance, const Circuit &circuit, std::uint64_t shots,
                     const NoiseModel &noise, std::uint64_t trajectories, std::uint64_t sim_seed, std::size_t p,
                     double delta) {
    const auto samples = sample(circuit, shots, point_noise(noise, p, delta), point_seed(sim_seed, p, delta),
                                TrajectoryOptions{trajectories});
    return approximation_ratio(samples, instance);
}

ordered_json counts_json(const CountReport &c) {
    return {{"n_two_qubit", c.n_two_qubit},
            {"n_zz_logical", c.n_zz_logical},
            {"two_qubit_depth", c.two_qubit_depth},
            {"n_single_qubit", c.n_single_qubit}};
}

CountReport counts_from(const nlohmann::json &j) {
    CountReport c;
    c.n_two_qubit = j.at("n_two_qubit").get<std::uint64_t>();
    c.n_zz_logical = j.at("n_zz_logical").get<std::uint64_t>();
    c.two_qubit_depth = j.at("two_qubit_depth").get<std::uint64_t>();
    c.n_single_qubit = j.at("n_single_qubit").get<std::uint64_t>();
    return c;
}

ordered_json baseline_json(const BaselineStats &b) {
    return {{"shots_per_subset", b.shots_per_subset},
            {"n_subsets", b.n_subsets},
            {"mean", b.mean},
            {"sigma", b.sigma},
            {"threshold", b.threshold},
            {"seed", b.seed}};
}

BaselineStats baseline_from(const nlohmann::json &j) {
    BaselineStats b;
    b.shots_per_subset = j.at("shots_per_subset").get<std::uint64_t>();
    b.n_subsets = j.at("n_subsets").get<std::size_t>();
    b.mean = j.at("mean").get<double>();
    b.sigma = j.at("sigma").get<double>();
    b.threshold = j.at("threshold").get<double>();
    b.seed = j.at("seed").get<std::uint64_t>();
    return b;
}

template <typename T>
ordered_json optional_json(const std::optional<T> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

BenchmarkRecord run_depth_sweep(const RunConfig &config) {
    const ProblemInstance instance = resolve_instance(config);
    const std::size_t n = instance.n_nodes();

    BenchmarkRecord record;
    record.config = config;
    record.topology = instance.topology.tag();
    record.n = n;
    record.n_edges = instance.graph.n_edges();
    record.instance_seed = instance.seed;
    if (instance.optimum) {
        record.optimum_value = instance.optimum->value;
    }
    record.tool_version = std::string(tool_version());
    if (config.record_timing) {
        record.timestamp = utc_timestamp();
    }

    double delta = 0.0;
    if (config.delta) {
        delta = *config.delta;
    } else {
        const auto lookup = default_delta(instance.topology, n, config.backend_class);
        delta = lookup.value;
        if (lookup.fallback) {
            record.warnings.push_back(lookup.warning);
        }
    }

    if (!config.export_only) {
        record.baseline = random_baseline(instance, config.shots, config.baseline_subsets, config.baseline_seed);
    }
    const NoiseModel noise = config.noise.value_or(NoiseModel{});

    for (std::size_t p : config.p_list) {
        PointResult point;
        point.p = p;
        point.delta = delta;
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto schedule = build_schedule(p, delta);
            const auto circuit = build_benchmark_circuit(instance, schedule, config.basis, config.chain_order);
            point.counts = count_gates(circuit);
            if (config.export_only) {
                if (config.export_dir) {
                    std::filesystem::create_directories(*config.export_dir);
                    write_file_atomic(*config.export_dir / ("circuit_p" + std::to_string(p) + ".lrq"),
                                      export_circuit(circuit));
                }
            } else {
                const double r = sampled_ratio(instance, circuit, config.shots, noise, config.trajectories,
                                               config.sim_seed, p, delta);
                point.r = r;
                point.r_eff = effective_ratio(r, *record.baseline);
                point.regime = classify_regime(r, *record.baseline);
            }
        } catch (const std::exception &e) {
            point.error = e.what();
        }
        if (config.record_timing) {
            point.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        record.results.push_back(std::move(point));
    }
    return record;
}

std::string record_to_json(const BenchmarkRecord &record) {
    const auto &cfg = record.config;
    ordered_json j;
    j["lrq-record"] = 1;
    j["tool_version"] = record.tool_version;
    if (!record.timestamp.empty()) {
        j["timestamp"] = record.timestamp;
    }
    ordered_json config;
    config["p_list"] = cfg.p_list;
    config["delta"] = optional_json(cfg.delta);
    config["backend_class"] = cfg.backend_class;
    config["basis"] = std::string(basis_tag(cfg.basis));
    config["shots"] = cfg.shots;
    if (cfg.noise) {
        config["noise"] = {{"eps_2q", cfg.noise->eps_2q}, {"rng_seed", cfg.noise->rng_seed}};
    } else {
        config["noise"] = nullptr;
    }
    config["trajectories"] = cfg.trajectories;
    config["sim_seed"] = cfg.sim_seed;
    config["baseline_seed"] = cfg.baseline_seed;
    config["baseline_subsets"] = cfg.baseline_subsets;
    config["export_only"] = cfg.export_only;
    j["config"] = std::move(config);
    j["instance"] = {{"topology", record.topology},
                     {"n", record.n},
                     {"n_edges", record.n_edges},
                     {"seed", record.instance_seed},
                     {"optimum_value", optional_json(record.optimum_value)}};
    j["conventions"] = {
        {"bit_order", "character i = node i"},
        {"noise", "two-qubit depolarizing after every two-qubit gate"},
        {"r_rand", "random-sampler mean + 3 sigma"},
        {"hqc_n1q", "p*n + n (includes initial Hadamards)"},
    };
    j["baseline"] = record.baseline ? baseline_json(*record.baseline) : ordered_json(nullptr);
    auto results = ordered_json::array();
    for (const auto &pt : record.results) {
        ordered_json row;
        row["p"] = pt.p;
        row["delta"] = pt.delta;
        row["r"] = optional_json(pt.r);
        row["r_eff"] = optional_json(pt.r_eff);
        row["regime"] = pt.regime ? ordered_json(std::string(regime_name(*pt.regime))) : ordered_json(nullptr);
        row["pass"] = pt.regime ? ordered_json(passes(*pt.regime)) : ordered_json(nullptr);
        row["counts"] = counts_json(pt.counts);
        row["wall_time"] = pt.wall_time;
        row["error"] = optional_json(pt.error);
        results.push_back(std::move(row));
    }
    j["results"] = std::move(results);
    j["warnings"] = record.warnings;
    return j.dump(2) + "\n";
}

BenchmarkRecord record_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("record is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("lrq-record").get<int>() != 1) {
            throw ParseError("unsupported record version");
        }
        BenchmarkRecord r;
        r.tool_version = j.at("tool_version").get<std::string>();
        r.timestamp = j.value("timestamp", std::string{});
        const auto &cfg = j.at("config");
        r.config.p_list = cfg.at("p_list").get<std::vector<std::size_t>>();
        if (!cfg.at("delta").is_null()) {
            r.config.delta = cfg.at("delta").get<double>();
        }
        r.config.backend_class = cfg.at("backend_class").get<std::string>();
        r.config.basis = parse_basis(cfg.at("basis").get<std::string>());
        r.config.shots = cfg.at("shots").get<std::uint64_t>();
        if (!cfg.at("noise").is_null()) {
            r.config.noise = NoiseModel{cfg["noise"].at("eps_2q").get<double>(),
                                        cfg["noise"].at("rng_seed").get<std::uint64_t>()};
        }
        r.config.trajectories = cfg.at("trajectories").get<std::uint64_t>();
        r.config.sim_seed = cfg.at("sim_seed").get<std::uint64_t>();
        r.config.baseline_seed = cfg.at("baseline_seed").get<std::uint64_t>();
        r.config.baseline_subsets = cfg.at("baseline_subsets").get<std::size_t>();
        r.config.export_only = cfg.at("export_only").get<bool>();
        const auto &inst = j.at("instance");
        r.topology = inst.at("topology").get<std::string>();
        r.n = inst.at("n").get<std::size_t>();
        r.n_edges = inst.at("n_edges").get<std::size_t>();
        r.instance_seed = inst.at("seed").get<std::uint64_t>();
        if (!inst.at("optimum_value").is_null()) {
            r.optimum_value = inst.at("optimum_value").get<double>();
        }
        if (!j.at("baseline").is_null()) {
            r.baseline = baseline_from(j.at("baseline"));
        }
        for (const auto &row : j.at("results")) {
            PointResult pt;
            pt.p = row.at("p").get<std::size_t>();
            pt.delta = row.at("delta").get<double>();
            if (!row.at("r").is_null()) {
                pt.r = row.at("r").get<double>();
            }
            if (!row.at("r_eff").is_null()) {
                pt.r_eff = row.at("r_eff").get<double>();
            }
            if (!row.at("regime").is_null()) {
                pt.regime = parse_regime(row.at("regime").get<std::string>());
            }
            pt.counts = counts_from(row.at("counts"));
            pt.wall_time = row.at("wall_time").get<double>();
            if (!row.at("error").is_null()) {
                pt.error = row.at("error").get<std::string>();
            }
            r.results.push_back(std::move(pt));
        }
        r.warnings = j.value("warnings", std::vector<std::string>{});
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed record: ") + e.what());
    }
}

std::string record_to_csv(const BenchmarkRecord &record) {
    std::ostringstream out;
    out << "p,delta,r,r_eff,regime,n_2q,depth\n";
    for (const auto &pt : record.results) {
        out << pt.p << ',' << format_double(pt.delta) << ',';
        out << (pt.r ? format_double(*pt.r) : "") << ',';
        out << (pt.r_eff ? format_double(*pt.r_eff) : "") << ',';
        out << (pt.regime ? regime_name(*pt.regime) : (pt.error ? "error" : "")) << ',';
        out << pt.counts.n_two_qubit << ',' << pt.counts.two_qubit_depth << '\n';
    }
    return out.str();
}

void write_record(const BenchmarkRecord &record, const std::filesystem::path &path) {
    write_file_atomic(path, record_to_json(record));
    auto csv = path;
    csv.replace_extension(".csv");
    write_file_atomic(csv, record_to_csv(record));
}

DiagramResult performance_diagram(const ProblemInstance &instance, std::span<const std::size_t> p_grid,
                                  std::span<const double> delta_grid, const DiagramOptions &options) {
    if (p_grid.empty() || delta_grid.empty()) {
        throw std::invalid_argument("diagram grids must be non-empty");
    }
    require_optimum(instance);
    DiagramResult out;
    out.p_grid.assign(p_grid.begin(), p_grid.end());
    out.delta_grid.assign(delta_grid.begin(), delta_grid.end());
    const std::size_t cols = delta_grid.size();
    out.r.assign(p_grid.size() * cols, 0.0);

    // Points run one at a time; sampling inside each point is parallel.
    for (std::size_t cell = 0; cell < out.r.size(); ++cell) {
        const std::size_t p = p_grid[cell / cols];
        const double delta = delta_grid[cell % cols];
        const auto circuit = build_benchmark_circuit(instance, build_schedule(p, delta), options.basis);
        if (options.shots == 0) {
            const NoiseModel noise = point_noise(options.noise, p, delta);
            out.r[cell] = noisy_expected_cost(circuit, instance, noise, std::max<std::uint64_t>(options.trajectories, 1)) /
                          instance.optimum->value;
        } else {
            out.r[cell] = sampled_ratio(instance, circuit, options.shots, options.noise, options.trajectories,
                                        options.sim_seed, p, delta);
        }
    }
    const auto best = std::max_element(out.r.begin(), out.r.end()) - out.r.begin();
    out.argmax_p = static_cast<std::size_t>(best) / cols;
    out.argmax_delta = static_cast<std::size_t>(best) % cols;
    return out;
}

std::string diagram_to_csv(const DiagramResult &diagram) {
    std::ostringstream out;
    out << "p,delta,r,argmax\n";
    for (std::size_t i = 0; i < diagram.p_grid.size(); ++i) {
        for (std::size_t j = 0; j < diagram.delta_grid.size(); ++j) {
            out << diagram.p_grid[i] << ',' << format_double(diagram.delta_grid[j]) << ','
                << format_double(diagram.at(i, j)) << ','
                << ((i == diagram.argmax_p && j == diagram.argmax_delta) ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

SampleSet ingest_samples_text(std::string_view text, const ProblemInstance &instance) {
    return samples_from_text(text, instance.n_nodes());
}

SampleSet ingest_samples(const std::filesystem::path &path, const ProblemInstance &instance) {
    return ingest_samples_text(read_file(path), instance);
}

Certificate certify(const SampleSet &samples, const ProblemInstance &instance, const BaselineConfig &config) {
    Certificate c;
    c.r = approximation_ratio(samples, instance);
    c.baseline = random_baseline(instance, config.shots_per_subset.value_or(samples.shots), config.n_subsets,
                                 config.seed);
    c.r_eff = effective_ratio(c.r, c.baseline);
    c.regime = classify_regime(c.r, c.baseline);
    c.pass = passes(c.regime);
    return c;
}

std::string certificate_to_json(const Certificate &certificate) {
    ordered_json j;
    j["r"] = certificate.r;
    j["r_eff"] = certificate.r_eff;
    j["regime"] = std::string(regime_name(certificate.regime));
    j["pass"] = certificate.pass;
    j["baseline"] = baseline_json(certificate.baseline);
    return j.dump(2) + "\n";
}

Circuit place_on_device(const Circuit &circuit, std::span<const Qubit> section, std::size_t device_qubits) {
    if (section.size() != circuit.n_qubits()) {
        throw std::invalid_argument("section length does not match the circuit width");
    }
    std::vector<bool> used(device_qubits, false);
    for (Qubit q : section) {
        if (q >= device_qubits || used[q]) {
            throw std::invalid_argument("section qubits must be distinct device qubits");
        }
        used[q] = true;
    }
    Circuit out(device_qubits, circuit.basis());
    for (Gate g : circuit.gates()) {
        if (g.kind != GateKind::MeasureAll) {
            g.qubits[0] = section[g.qubits[0]];
            if (g.is_two_qubit()) {
                g.qubits[1] = section[g.qubits[1]];
            }
        }
        out.append(g);
    }
    // Logical i ends on section[layout[i]]; idle device qubits keep their place.
    std::vector<Qubit> layout(device_qubits);
    for (std::size_t i = 0; i < section.size(); ++i) {
        layout[section[i]] = section[circuit.layout()[i]];
    }
    for (Qubit q = 0; q < device_qubits; ++q) {
        if (!used[q]) {
            layout[q] = q;
        }
    }
    out.set_layout(std::move(layout));
    return out;
}

SampleSet project_samples(const SampleSet &device_samples, std::span<const Qubit> section) {
    SampleSet out;
    out.n_qubits = section.size();
    for (const auto &[bits, count] : device_samples.counts) {
        Bitstring sub(section.size());
        for (std::size_t i = 0; i < section.size(); ++i) {
            if (section[i] >= bits.size()) {
                throw std::invalid_argument("section qubit outside the sample width");
            }
            sub.set(i, bits[section[i]]);
        }
        out.add(sub, count);
    }
    return out;
}

std::vector<SectionResult> rank_sections(const ProblemInstance &instance,
                                         std::span<const std::pair<std::vector<Qubit>, SampleSet>> runs,
                                         const BaselineConfig &config) {
    std::vector<SectionResult> out;
    out.reserve(runs.size());
    for (const auto &[section, samples] : runs) {
        out.push_back({section, certify(samples, instance, config)});
    }
    std::stable_sort(out.begin(), out.end(), [](const SectionResult &a, const SectionResult &b) {
        return a.certificate.r > b.certificate.r;
    });
    return out;
}

}  // namespace lrq
