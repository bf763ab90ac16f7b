# Copyright 2026 The bosonq Authors
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
"""Truncated bosonic Hamiltonians on qubit registers."""

import json as _json

from ._core import (
    CapExceeded,
    InputError,
    VerificationError,
    block_encoding,
    count,
    decompose,
    decompose_trace,
    fit,
    fock_p,
    fock_x,
    hamiltonian,
    potential_zsum,
    qft_unitary,
    reconstruct,
    shift_matrix,
    table1,
    trotter_counts,
    trotter_error,
)


def spec_json(spec):
    """Accepts a spec as a dict or a JSON string and returns the JSON text."""
    return spec if isinstance(spec, str) else _json.dumps(spec)


__all__ = [
    "CapExceeded",
    "InputError",
    "VerificationError",
    "block_encoding",
    "count",
    "decompose",
    "decompose_trace",
    "fit",
    "fock_p",
    "fock_x",
    "hamiltonian",
    "potential_zsum",
    "qft_unitary",
    "reconstruct",
    "shift_matrix",
    "spec_json",
    "table1",
    "trotter_counts",
    "trotter_error",
]
