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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lrq/bench.hpp"
#include "lrq/error.hpp"

namespace py = pybind11;
using namespace lrq;

namespace {

// Samples as {bitstring text: count}, the form Python callers build by hand.
py::dict counts_to_dict(const SampleSet &samples) {
    py::dict out;
    for (const auto &[bits, count] : samples.counts) {
        out[py::str(bits.to_string())] = count;
    }
    return out;
}

SampleSet counts_from_dict(const std::map<std::string, std::uint64_t> &counts) {
    SampleSet s;
    for (const auto &[text, count] : counts) {
        auto bits = Bitstring::parse(text);
        if (s.counts.empty() && s.shots == 0) {
            s.n_qubits = bits.size();
        } else if (bits.size() != s.n_qubits) {
            throw std::invalid_argument("bitstrings have mixed lengths");
        }
        s.add(bits, count);
    }
    if (s.shots == 0) {
        throw std::invalid_argument("empty sample counts");
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "LR-QAOA benchmarking core";
    m.attr("__version__") = std::string(tool_version());

    auto error = py::register_exception<Error>(m, "LrqError", PyExc_RuntimeError);
    py::register_exception<SizeMismatchError>(m, "SizeMismatchError", error.ptr());
    py::register_exception<OptimumUnavailableError>(m, "OptimumUnavailableError", error.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    py::class_<Topology>(m, "Topology")
        .def_static("parse", &Topology::parse, py::arg("tag"))
        .def_property_readonly("tag", &Topology::tag)
        .def("valid_sizes", &Topology::valid_sizes)
        .def("coupling_map", &Topology::coupling_map, py::arg("n"))
        .def("__repr__", [](const Topology &t) { return "Topology('" + t.tag() + "')"; });

    py::class_<ProblemInstance>(m, "ProblemInstance")
        .def_property_readonly("n", &ProblemInstance::n_nodes)
        .def_property_readonly("topology", [](const ProblemInstance &i) { return i.topology; })
        .def_property_readonly("seed", [](const ProblemInstance &i) { return i.seed; })
        .def_property_readonly("edges",
                               [](const ProblemInstance &i) {
                                   std::vector<std::tuple<NodeIndex, NodeIndex, double>> out;
                                   for (const auto &e : i.graph.edges()) {
                                       out.emplace_back(e.u, e.v, e.w);
                                   }
                                   return out;
                               })
        .def_property_readonly("optimum",
                               [](const ProblemInstance &i) -> py::object {
                                   if (!i.optimum) {
                                       return py::none();
                                   }
                                   return py::make_tuple(i.optimum->bits.to_string(), i.optimum->value);
                               })
        .def("cost", [](const ProblemInstance &i, const std::string &bits) { return cost(i, Bitstring::parse(bits)); })
        .def("to_json", &instance_to_json)
        .def_static("from_json", &instance_from_json, py::arg("text"));

    m.def(
        "generate_instance",
        [](const std::string &topology, std::size_t n, std::uint64_t seed, std::vector<double> weights,
           bool optimum) {
            auto inst = generate_instance(Topology::parse(topology), n, weights, seed);
            return optimum ? with_optimum(std::move(inst)) : inst;
        },
        py::arg("topology"), py::arg("n"), py::arg("seed") = 0, py::arg("weights") = default_weight_set(),
        py::arg("optimum") = true);

    py::class_<RampSchedule>(m, "RampSchedule")
        .def_readonly("p", &RampSchedule::p)
        .def_readonly("betas", &RampSchedule::betas)
        .def_readonly("gammas", &RampSchedule::gammas);
    m.def("build_schedule", py::overload_cast<std::size_t, double, double>(&build_schedule), py::arg("p"),
          py::arg("delta_beta"), py::arg("delta_gamma"));
    m.def("build_schedule", py::overload_cast<std::size_t, double>(&build_schedule), py::arg("p"),
          py::arg("delta"));
    m.def(
        "default_delta",
        [](const std::string &topology, std::size_t n, const std::string &backend) {
            return default_delta(Topology::parse(topology), n, backend).value;
        },
        py::arg("topology"), py::arg("n"), py::arg("backend") = "qasm_simulator");

    py::class_<CountReport>(m, "CountReport")
        .def_readonly("n_two_qubit", &CountReport::n_two_qubit)
        .def_readonly("n_zz_logical", &CountReport::n_zz_logical)
        .def_readonly("two_qubit_depth", &CountReport::two_qubit_depth)
        .def_readonly("n_single_qubit", &CountReport::n_single_qubit);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("n_qubits", &Circuit::n_qubits)
        .def_property_readonly("basis", [](const Circuit &c) { return std::string(basis_tag(c.basis())); })
        .def_property_readonly("layout", &Circuit::layout)
        .def("__len__", [](const Circuit &c) { return c.gates().size(); })
        .def("counts", &count_gates)
        .def(
            "export",
            [](const Circuit &c, const std::string &format) {
                if (format != "neutral" && format != "qasm") {
                    throw std::invalid_argument("format must be 'neutral' or 'qasm'");
                }
                return export_circuit(c, format == "qasm" ? CircuitFormat::Qasm2 : CircuitFormat::Neutral);
            },
            py::arg("format") = "neutral")
        .def_static("from_text", &import_circuit, py::arg("text"));

    m.def(
        "build_circuit",
        [](const ProblemInstance &inst, const RampSchedule &schedule, const std::string &basis) {
            return build_benchmark_circuit(inst, schedule, parse_basis(basis));
        },
        py::arg("instance"), py::arg("schedule"), py::arg("basis") = "abstract_zz");
    m.def(
        "predicted_counts",
        [](const std::string &topology, const std::string &basis, std::size_t p, std::size_t n,
           std::size_t n_edges) {
            return predicted_counts(Topology::parse(topology), parse_basis(basis), p, n, n_edges);
        },
        py::arg("topology"), py::arg("basis"), py::arg("p"), py::arg("n"), py::arg("n_edges"));

    m.def(
        "sample",
        [](const Circuit &c, std::uint64_t shots, double eps, std::uint64_t seed, std::uint64_t trajectories) {
            SampleSet s;
            {
                py::gil_scoped_release release;
                s = sample(c, shots, NoiseModel{eps, derive_seed(seed, 1)}, seed, TrajectoryOptions{trajectories});
            }
            return counts_to_dict(s);
        },
        py::arg("circuit"), py::arg("shots"), py::arg("eps") = 0.0, py::arg("seed") = 1,
        py::arg("trajectories") = 0);
    m.def(
        "expected_ratio",
        [](const Circuit &c, const ProblemInstance &inst, double eps, std::uint64_t trajectories,
           std::uint64_t seed) {
            py::gil_scoped_release release;
            return noisy_expected_cost(c, inst, NoiseModel{eps, seed}, trajectories) / require_optimum(inst).value;
        },
        py::arg("circuit"), py::arg("instance"), py::arg("eps") = 0.0, py::arg("trajectories") = 1,
        py::arg("seed") = 1);

    py::class_<BaselineStats>(m, "BaselineStats")
        .def_readonly("mean", &BaselineStats::mean)
        .def_readonly("sigma", &BaselineStats::sigma)
        .def_readonly("threshold", &BaselineStats::threshold)
        .def_readonly("shots_per_subset", &BaselineStats::shots_per_subset)
        .def_readonly("n_subsets", &BaselineStats::n_subsets);
    m.def(
        "approximation_ratio",
        [](const std::map<std::string, std::uint64_t> &counts, const ProblemInstance &inst) {
            return approximation_ratio(counts_from_dict(counts), inst);
        },
        py::arg("counts"), py::arg("instance"));
    m.def("random_baseline", &random_baseline, py::arg("instance"), py::arg("shots_per_subset"),
          py::arg("n_subsets") = kDefaultBaselineSubsets, py::arg("seed") = 0);
    m.def(
        "certify",
        [](const std::map<std::string, std::uint64_t> &counts, const ProblemInstance &inst, std::uint64_t seed) {
            const auto cert = certify(counts_from_dict(counts), inst, BaselineConfig{{}, kDefaultBaselineSubsets, seed});
            py::dict out;
            out["r"] = cert.r;
            out["r_eff"] = cert.r_eff;
            out["regime"] = std::string(regime_name(cert.regime));
            out["pass"] = cert.pass;
            out["threshold"] = cert.baseline.threshold;
            return out;
        },
        py::arg("counts"), py::arg("instance"), py::arg("seed") = 0);

    m.def("hqc_estimate", &hqc_estimate, py::arg("n"), py::arg("p"), py::arg("shots"));
    m.def(
        "runtime_projection",
        [](std::uint64_t n, std::uint64_t p, std::uint64_t shots, double t_2q, const std::string &device) {
            return runtime_projection(n, p, shots, t_2q, parse_device_class(device)).runtime();
        },
        py::arg("n"), py::arg("p"), py::arg("shots"), py::arg("t_2q"), py::arg("device") = "fixed");

    m.def(
        "run_depth_sweep",
        [](const ProblemInstance &inst, std::vector<std::size_t> p_list, std::optional<double> delta,
           const std::string &basis, std::uint64_t shots, double eps, std::uint64_t seed, bool timing) {
            RunConfig cfg;
            cfg.instance = inst;
            cfg.p_list = std::move(p_list);
            cfg.delta = delta;
            cfg.basis = parse_basis(basis);
            cfg.shots = shots;
            if (eps > 0.0) {
                cfg.noise = NoiseModel{eps, derive_seed(seed, 2)};
            }
            cfg.sim_seed = seed;
            cfg.record_timing = timing;
            py::gil_scoped_release release;
            return record_to_json(run_depth_sweep(cfg));
        },
        py::arg("instance"), py::arg("p_list"), py::arg("delta") = py::none(), py::arg("basis") = "cz",
        py::arg("shots") = 1000, py::arg("eps") = 0.0, py::arg("seed") = 1, py::arg("timing") = false);
}
