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

"""Linear-ramp QAOA benchmarking."""

from lrqbench._core import (
    BaselineStats,
    Circuit,
    CountReport,
    LrqError,
    OptimumUnavailableError,
    ParseError,
    ProblemInstance,
    RampSchedule,
    ResourceError,
    SizeMismatchError,
    Topology,
    __version__,
    approximation_ratio,
    build_circuit,
    build_schedule,
    certify,
    default_delta,
    expected_ratio,
    generate_instance,
    hqc_estimate,
    predicted_counts,
    random_baseline,
    run_depth_sweep,
    runtime_projection,
    sample,
)
