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

#include "bosonq/pauli.hpp"
#include "bosonq/sparse_operator.hpp"

namespace bosonq {

struct DecomposeOptions {
  /// Terms with |c| <= rel_tol * max|c| are dropped (exact zeros always are).
  double rel_tol = PauliSum::kDefaultRelativeTolerance;
  /// Hard qubit cap for the brute-force trace sweep.
  int trace_max_qubits = 8;
  /// Qubit cap for the quadrant recursion.
  int tensorized_max_qubits = 20;
};

/// Brute-force coefficients Tr(P^dag M) / 2^n over all 4^n strings.
///
/// Only the nonzero entries of M are visited: entry (r, c) contributes to the
/// strings with x_mask = r ^ c, so the sweep costs nnz * 2^n. Throws
/// InputError for non power-of-two dimensions and CapExceeded past
/// trace_max_qubits.
PauliSum decompose_trace(const SparseOperator& m,
                         const DecomposeOptions& options = {});

/// Recursive quadrant split on the most-significant qubit:
///   I <- (A + D) / 2,  X <- (B + C) / 2,  Y <- i (B - C) / 2,  Z <- (A - D) / 2
/// for M = [[A, B], [C, D]]. Quadrants are kept sparse, so banded operators
/// such as the truncated Fock x at cutoff 2^14 decompose without dense
/// storage. Worst-case memory is O(4^n) coefficients.
PauliSum decompose_tensorized(const SparseOperator& m,
                              const DecomposeOptions& options = {});

}  // namespace bosonq
