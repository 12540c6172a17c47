# Copyright 2026 The qrnet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the qrnet reservoir-network simulator."""

from ._core import (
    expm,
    fit_linear_readout,
    herm_eig,
    kron,
    lindblad_rhs,
    log_negativity,
    lowering_op,
    mean_occupation,
    partial_trace,
    partial_transpose,
    propagate,
    random_teacher,
    singlet_basis,
    singlet_count,
    singlet_projectors,
    squeeze_operator,
    squeezed_thermal_state,
    thermal_two_mode,
    total_spin,
    total_spin_squared,
    trace_norm,
)

__all__ = [
    "expm",
    "fit_linear_readout",
    "herm_eig",
    "kron",
    "lindblad_rhs",
    "log_negativity",
    "lowering_op",
    "mean_occupation",
    "partial_trace",
    "partial_transpose",
    "propagate",
    "random_teacher",
    "singlet_basis",
    "singlet_count",
    "singlet_projectors",
    "squeeze_operator",
    "squeezed_thermal_state",
    "thermal_two_mode",
    "total_spin",
    "total_spin_squared",
    "trace_norm",
]
