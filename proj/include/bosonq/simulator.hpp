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

#include <vector>

#include "bosonq/circuit.hpp"
#include "bosonq/hamiltonian.hpp"
#include "bosonq/sparse_operator.hpp"

namespace bosonq {

/// Dense amplitudes; basis index bit q is qubit q.
class StateVector {
 public:
  static constexpr int kMaxQubits = 20;

  /// |0...0>.
  explicit StateVector(int n_qubits);
  static StateVector basis_state(int n_qubits, std::uint64_t index);
  /// Normalizes the given amplitudes; throws for a zero vector.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx operator[](std::uint64_t i) const { return amps_[i]; }
  double norm() const;

  void apply(const Gate& gate);

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

/// Applies gates in order; throws InputError on register mismatch.
StateVector apply_circuit(const Circuit& circuit, StateVector state);

/// Dense unitary of a circuit (column k = circuit applied to |k>), n <= 12.
DenseMatrix circuit_unitary(const Circuit& circuit);
SparseOperator circuit_matrix(const Circuit& circuit);

/// exp(-i H t) via Hermitian eigendecomposition.
struct Propagator {
  SparseOperator hamiltonian;
  double time = 0.0;
  DenseMatrix unitary;
};

/// Throws InputError for non-Hermitian H and CapExceeded beyond 2^12.
Propagator exact_propagator(const SparseOperator& h, double t);

/// max |U_trotter - U_exact| between the simulated first-order Trotter
/// circuit and exp(-i H T) of coordinate_hamiltonian(spec). B*Q <= 12.
double trotter_error(const HamiltonianSpec& spec, double total_time, int steps);

}  // namespace bosonq
