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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace bosonq {

using cplx = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

struct Entry {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  cplx value{};
};

/// Square complex matrix in coordinate-list form.
///
/// Entries are kept sorted row-major with unique (row, col) pairs; anything
/// with |value| <= kPruneTolerance is dropped on construction.
class SparseOperator {
 public:
  static constexpr double kPruneTolerance = 1e-14;

  SparseOperator() = default;
  explicit SparseOperator(std::uint64_t dimension) : dim_(dimension) {}

  /// Duplicate (row, col) pairs are summed before pruning.
  static SparseOperator from_entries(std::uint64_t dimension,
                                     std::vector<Entry> entries);
  static SparseOperator identity(std::uint64_t dimension);
  static SparseOperator from_dense(const DenseMatrix& m);
  static SparseOperator diagonal(std::span<const cplx> values);

  std::uint64_t dimension() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  cplx at(std::uint64_t row, std::uint64_t col) const;
  DenseMatrix to_dense() const;

  SparseOperator adjoint() const;
  SparseOperator scaled(cplx factor) const;

  /// max |M - M^dagger| over all entries.
  double hermiticity_error() const;
  bool is_hermitian(double tol = 1e-12) const {
    return hermiticity_error() <= tol;
  }
  bool is_diagonal() const;

  /// Sets the Hermitian flag after certifying max|M - M^dagger| <= 1e-12.
  /// Throws VerificationError otherwise.
  SparseOperator& certify_hermitian();
  bool hermitian_flag() const { return hermitian_flag_; }

  friend SparseOperator operator+(const SparseOperator& a,
                                  const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a,
                                  const SparseOperator& b);
  friend SparseOperator operator*(const SparseOperator& a,
                                  const SparseOperator& b);

 private:
  std::uint64_t dim_ = 0;
  std::vector<Entry> entries_;
  bool hermitian_flag_ = false;
};

/// Kronecker product; `high` occupies the most-significant index bits.
SparseOperator kron(const SparseOperator& high, const SparseOperator& low);

/// Embeds a single-register operator acting on index bits
/// [offset_bits, offset_bits + log2(op.dim)) of a `total_bits` register.
SparseOperator embed(const SparseOperator& op, int offset_bits,
                     int total_bits);

double max_abs_diff(const SparseOperator& a, const SparseOperator& b);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// log2 of `dimension`, or -1 when it is not a positive power of two.
int log2_exact(std::uint64_t dimension);

}  // namespace bosonq
