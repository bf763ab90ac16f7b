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
#include <vector>

#include "bosonq/operators.hpp"
#include "bosonq/pauli.hpp"
#include "bosonq/sparse_operator.hpp"

namespace bosonq {

enum class TermTag { Potential, Kinetic };

struct LcuTerm {
  PauliTerm string;  // unit-coefficient Pauli string
  TermTag tag = TermTag::Potential;
  double weight = 0.0;  // |alpha|
  int sign = 1;         // folded into the select operation
};

/// Linear-combination-of-unitaries plan for
///   H = sum_i alpha_i P_i + sum_j beta_j F^dag P~_j F.
/// Potential terms take the low ancilla indices, kinetic terms follow.
struct LcuPlan {
  int system_qubits = 0;
  std::vector<LcuTerm> terms;
  double lambda = 0.0;
  int ancilla_qubits = 0;
  /// g_i = sqrt(|alpha_i| / lambda), zero-padded to 2^ancilla_qubits.
  std::vector<double> amplitudes;

  std::size_t count(TermTag tag) const;
};

/// Throws InputError for an empty Hamiltonian, mismatched registers or
/// complex coefficients.
LcuPlan build_plan(const PauliSum& potential, const PauliSum& kinetic);

/// Real orthogonal matrix whose first column is the amplitude vector
/// (a Householder reflection). Throws InputError unless sum g^2 = 1.
Eigen::MatrixXd prepare_g(const LcuPlan& plan);

/// Select operator on (ancilla ⊗ system); the ancilla index occupies the
/// high bits. Potential branch i applies sign_i P_i, kinetic branch j applies
/// sign_j F^dag P~_j F, unused branches apply the identity. Built as
/// (I ⊗ F^dag) U_kin (I ⊗ F) U_pot. `transform` defaults to identity and must
/// be given when kinetic terms are present.
SparseOperator build_select(const LcuPlan& plan,
                            const std::optional<SparseOperator>& transform);

struct BlockEncoding {
  LcuPlan plan;
  Eigen::MatrixXd prepare;
  SparseOperator select;
};

BlockEncoding build_block_encoding(const PauliSum& potential,
                                   const PauliSum& kinetic,
                                   const std::optional<SparseOperator>& transform);

/// Block encoding of a coordinate+QFT Hamiltonian (potential and kinetic
/// Z-strings, centered momentum kernel).
BlockEncoding build_block_encoding(const TruncationConfig& config,
                                   const PauliSum& potential,
                                   const PauliSum& kinetic);

/// max |(<G| ⊗ I) U (|G> ⊗ I) - H / lambda|, |G> = prepare |0>.
/// Total qubits limited to 14.
double verify_block_encoding(const BlockEncoding& be, const SparseOperator& h);

/// max |U^dag U - I|.
double unitarity_error(const SparseOperator& u);

}  // namespace bosonq
