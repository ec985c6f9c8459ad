# Copyright 2026 The lrqbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools
import json

import pytest

import lrqbench as lrq


def test_instance_and_optimum():
    inst = lrq.generate_instance("fc", 6, seed=3)
    assert inst.n == 6
    assert len(inst.edges) == 15
    bits, value = inst.optimum
    best = max(inst.cost("".join(x)) for x in itertools.product("01", repeat=6))
    assert value == pytest.approx(best)
    assert inst.cost(bits) == pytest.approx(value)
    back = lrq.ProblemInstance.from_json(inst.to_json())
    assert back.to_json() == inst.to_json()


def test_size_mismatch_is_typed():
    with pytest.raises(lrq.SizeMismatchError):
        lrq.generate_instance("heavyhex:eagle127", 100)
    assert issubclass(lrq.SizeMismatchError, lrq.LrqError)


def test_gate_count_goldens():
    inst = lrq.generate_instance("fc", 20, optimum=False)
    circuit = lrq.build_circuit(inst, lrq.build_schedule(3, 0.3), "cz")
    assert circuit.counts().n_two_qubit == 1710
    assert lrq.predicted_counts("chain", "cz", 9, 100, 99).n_two_qubit == 1782


def test_estimators():
    assert lrq.hqc_estimate(20, 20, 50) == pytest.approx(390.2)
    assert lrq.runtime_projection(25, 100, 1000, 68e-9) == pytest.approx(0.51)
    assert lrq.runtime_projection(25, 100, 1000, 600e-6, "sequential") == pytest.approx(18000.0)


def test_signal_and_certification():
    inst = lrq.generate_instance("chain", 8, seed=2)
    circuit = lrq.build_circuit(inst, lrq.build_schedule(10, 1.0), "cz")
    counts = lrq.sample(circuit, 500, seed=4)
    assert sum(counts.values()) == 500
    assert all(len(k) == 8 for k in counts)
    cert = lrq.certify(counts, inst, seed=1)
    assert cert["pass"]
    assert cert["regime"] == "above_random"
    assert cert["r"] == pytest.approx(lrq.approximation_ratio(counts, inst))
    exact = lrq.expected_ratio(circuit, inst)
    assert cert["r"] == pytest.approx(exact, abs=0.05)


def test_export_round_trip():
    inst = lrq.generate_instance("fc", 5, seed=1)
    circuit = lrq.build_circuit(inst, lrq.build_schedule(1, 0.5), "cnot")
    text = circuit.export()
    again = lrq.Circuit.from_text(text)
    assert again.export() == text
    assert list(again.layout) == [4, 3, 2, 1, 0]
    with pytest.raises(lrq.ParseError):
        lrq.Circuit.from_text("garbage")


def test_sweep_is_deterministic():
    inst = lrq.generate_instance("chain", 6, seed=5)
    a = lrq.run_depth_sweep(inst, [1, 3, 6], shots=200, eps=0.01)
    b = lrq.run_depth_sweep(inst, [1, 3, 6], shots=200, eps=0.01)
    assert a == b
    record = json.loads(a)
    assert record["lrq-record"] == 1
    assert [row["p"] for row in record["results"]] == [1, 3, 6]
