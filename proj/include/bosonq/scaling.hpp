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

#include <array>
#include <cstdint>
#include <istream>
#include <vector>

namespace bosonq {

struct ScalingRow {
  int qubits = 0;
  std::uint64_t n_pauli = 0;
  /// ln(n_pauli) / qubits
  double y = 0.0;
};

/// Rows strictly increasing in Q with N_Pauli >= 1.
class ScalingSeries {
 public:
  ScalingSeries() = default;
  /// Throws InputError when Q does not increase or N_Pauli < 1.
  ScalingSeries& add(int qubits, std::uint64_t n_pauli);
  /// Adds a row from y = ln(N)/Q directly; N is rounded for display.
  ScalingSeries& add_y(int qubits, double y);
  const std::vector<ScalingRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<ScalingRow> rows_;
};

/// Least-squares fit of y = a + (b + c ln Q) / Q (natural log).
struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double residual_rms = 0.0;
  /// Standard errors from sigma^2 (X^T X)^{-1}; zero for exact fits or when
  /// there are no spare degrees of freedom.
  std::array<double, 3> std_errors{};
  /// Ratio of largest to smallest eigenvalue of X^T X.
  double normal_condition = 0.0;
  std::size_t rows = 0;
};

/// Solves the 3x3 normal equations in closed form. Needs >= 4 rows; throws
/// InputError for fewer than 3 distinct Q (rank-deficient design).
FitResult fit_scaling(const ScalingSeries& series);

/// Reads a CSV with a header containing `Q` and `n_pauli` columns.
ScalingSeries read_series_csv(std::istream& is);

}  // namespace bosonq
