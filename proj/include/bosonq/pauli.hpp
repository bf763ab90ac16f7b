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

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bosonq/sparse_operator.hpp"

namespace bosonq {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

/// Symplectic Pauli string with a complex weight.
///
/// Qubit j is encoded by bit j of (x_mask, z_mask):
/// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. Qubit 0 is the least-significant bit
/// of the computational basis index. The Y letter is the genuine Pauli Y, so
/// the operator is coefficient * i^{|x&z|} * X^x Z^z.
struct PauliTerm {
  static constexpr int kMaxQubits = 32;

  int n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  cplx coefficient{1.0, 0.0};

  static PauliTerm identity(int n_qubits, cplx coefficient = 1.0);
  static PauliTerm single(int n_qubits, int qubit, PauliLetter letter,
                          cplx coefficient = 1.0);
  /// Parses letters with the most-significant qubit leftmost ("XI" = X on
  /// qubit 1, I on qubit 0).
  static PauliTerm from_msb_string(std::string_view letters,
                                   cplx coefficient = 1.0);
  /// Parses letters with qubit 0 leftmost.
  static PauliTerm from_lsb_string(std::string_view letters,
                                   cplx coefficient = 1.0);

  PauliLetter letter(int qubit) const;
  int weight() const;
  bool is_identity() const { return (x_mask | z_mask) == 0; }
  bool is_z_only() const { return x_mask == 0; }

  std::string msb_string() const;
  std::string lsb_string() const;

  /// Matrix element phase for P|col> = phase * |col ^ x_mask>.
  cplx phase_for_column(std::uint64_t col) const;
  SparseOperator to_sparse() const;
};

/// Product of two strings (coefficients multiply, Pauli phases tracked).
PauliTerm operator*(const PauliTerm& a, const PauliTerm& b);

/// Sum of Pauli strings, unique by (x_mask, z_mask), sorted by key.
class PauliSum {
 public:
  static constexpr double kDefaultRelativeTolerance = 1e-12;

  PauliSum() = default;
  explicit PauliSum(int n_qubits);

  /// Merges duplicates, then drops |c| <= rel_tol * max|c| and exact zeros.
  static PauliSum from_terms(int n_qubits, std::vector<PauliTerm> terms,
                             double rel_tol = kDefaultRelativeTolerance);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the string with the given masks (0 when absent).
  cplx coefficient(std::uint64_t x_mask, std::uint64_t z_mask) const;
  cplx coefficient(std::string_view msb_letters) const;

  /// Number of strings that are not the identity.
  std::size_t nontrivial_count() const;
  double one_norm() const;
  double max_imag() const;

  PauliSum scaled(cplx factor) const;

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Sum of coefficient * string matrix.
SparseOperator reconstruct(const PauliSum& sum);

/// Number of terms with |coefficient| > tol.
std::size_t count_strings(const PauliSum& sum, double tol = 0.0);

struct LengthStats {
  std::size_t strings = 0;
  std::size_t x_letters = 0;
  std::size_t y_letters = 0;
  std::size_t z_letters = 0;
  std::size_t even_y_strings = 0;
  std::size_t xy_only_strings = 0;
};

/// Histogram of strings keyed by length (number of non-identity letters).
using StringCensus = std::map<int, LengthStats>;

StringCensus string_census(const PauliSum& sum);

/// "1:3;2:6" style compact rendering (length:count pairs).
std::string census_summary(const StringCensus& census);

/// Text form: a "# n_qubits <n> ordering msb-left" header, then one
/// "<letters> <re> <im>" line per term, most-significant qubit leftmost.
void write_pauli_sum(std::ostream& os, const PauliSum& sum);
PauliSum read_pauli_sum(std::istream& is);

}  // namespace bosonq
