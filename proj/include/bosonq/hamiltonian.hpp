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
#include <vector>

#include "bosonq/operators.hpp"
#include "bosonq/pauli.hpp"
#include "bosonq/sparse_operator.hpp"

namespace bosonq {

/// coefficient * prod_a x_a^{exponents[a]}.
struct Monomial {
  double coefficient = 0.0;
  std::vector<int> exponents;

  int degree() const;
  bool is_constant() const { return degree() == 0; }
};

/// V(x_1, ..., x_B) as a list of weighted monomials.
class PolynomialPotential {
 public:
  explicit PolynomialPotential(int bosons) : bosons_(bosons) {}
  PolynomialPotential(int bosons, std::vector<Monomial> terms);

  /// Throws InputError for a wrong exponent count, a negative power or a
  /// non-finite coefficient.
  PolynomialPotential& add(Monomial term);

  int bosons() const { return bosons_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  /// C, the number of monomials.
  std::size_t term_count() const { return terms_.size(); }
  int max_degree() const;
  bool is_zero() const { return terms_.empty(); }

  /// Point evaluation, used by the grid oracle.
  double evaluate(const std::vector<double>& x) const;

 private:
  int bosons_;
  std::vector<Monomial> terms_;
};

enum class KineticScheme {
  MomentumDiagonal,
  FiniteDifferenceOpen,
  FiniteDifferencePeriodic,
};

enum class Basis { CoordinateQft, Fock };

std::string_view to_string(KineticScheme scheme);
std::string_view to_string(Basis basis);
KineticScheme parse_kinetic_scheme(std::string_view text);
Basis parse_basis(std::string_view text);

/// Everything needed to build one truncated Hamiltonian.
///
/// The coordinate+QFT basis needs a radius; the Fock basis needs FockParams.
/// `fock_kinetic` adds p^2/2 to the Fock-basis matrix (off by default so that
/// counts refer to the potential alone).
struct HamiltonianSpec {
  int bosons = 1;
  int qubits_per_boson = 1;
  std::optional<double> radius;
  KineticScheme kinetic = KineticScheme::MomentumDiagonal;
  Basis basis = Basis::CoordinateQft;
  std::optional<FockParams> fock;
  bool fock_kinetic = false;
  PolynomialPotential potential{1};

  void validate() const;
  /// Throws InputError when the radius is missing.
  TruncationConfig config() const;
  HamiltonianSpec with_qubits(int q) const;
};

struct PotentialExpansion {
  PauliSum merged;
  /// Sum over monomials of Q^degree (pre-merge product count).
  std::size_t raw_count = 0;
  /// Set when every monomial is a constant.
  bool constant_only = false;
};

/// Substitutes each x_a by its Z-sum and multiplies factor by factor.
PotentialExpansion expand_potential_zsum(const HamiltonianSpec& spec);

/// sum_a p_a^2 / 2 as Z-strings in the momentum basis.
PauliSum kinetic_zsum(const HamiltonianSpec& spec);

/// sum_a (2 I - S_Q) / dx^2 embedded on each boson register (no 1/2 factor).
SparseOperator kinetic_finite_difference(const HamiltonianSpec& spec);

/// Potential (and optionally p^2/2) from truncated Fock-basis x and p,
/// multiplied after truncation. Register limited to 14 qubits.
SparseOperator fock_hamiltonian(const HamiltonianSpec& spec);

/// reconstruct(potential) + F^dag reconstruct(kinetic) F in the coordinate
/// basis, F the centered momentum kernel on every boson.
SparseOperator coordinate_hamiltonian(const HamiltonianSpec& spec);

}  // namespace bosonq
