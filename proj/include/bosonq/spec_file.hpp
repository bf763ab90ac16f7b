// Copyright 2026 The bosonq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bosonq/hamiltonian.hpp"
#include "bosonq/pauli.hpp"

namespace bosonq {

/// Parsed Hamiltonian input file.
///
/// Either a bosonic Hamiltonian (bosons, qubits_per_boson, radius,
/// kinetic_scheme, basis, fock, fock_kinetic, potential) or a plain list of
/// Pauli strings under "pauli_terms" for toy block-encoding runs.
struct ProblemFile {
  std::optional<HamiltonianSpec> hamiltonian;
  std::optional<PauliSum> pauli;
};

/// Throws InputError with a "line N" prefix pointing at the offending field.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

}  // namespace bosonq
